#include "bvkit/tensor.hpp"

#include "bvkit/error.hpp"

namespace bvkit {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t d) {
  std::size_t idx = 0;
  for (std::size_t i : t) {
    if (i >= d) throw DimensionMismatch("tuple entry out of range");
    idx = idx * d + i;
  }
  return idx;
}

std::vector<std::size_t> index_tuple(std::size_t index, std::size_t d, std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t k = n; k-- > 0;) {
    t[k] = index % d;
    index /= d;
  }
  return t;
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t d) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < d) return true;
    t[k] = 0;
  }
  return false;
}

}  // namespace bvkit
