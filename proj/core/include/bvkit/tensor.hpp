#pragma once

#include <cstddef>
#include <vector>

namespace bvkit {

std::size_t ipow(std::size_t base, std::size_t exp);

// Tuple (i_1..i_n) of V^{⊗n} with dim V = d maps to sum_k i_k d^{n-k}.
std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t d);
std::vector<std::size_t> index_tuple(std::size_t index, std::size_t d, std::size_t n);

// Odometer over {0..d-1}^n in index order. Returns false once exhausted.
bool next_tuple(std::vector<std::size_t>& t, std::size_t d);

}  // namespace bvkit
