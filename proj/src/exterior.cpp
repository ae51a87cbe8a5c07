#include "liouville/exterior.hpp"

#include <set>

namespace liouville {

Coframe::Coframe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || static_cast<int>(names_.size()) > kMaxCoframeDim)
    throw InputError("coframe dimension must be in 1..16");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw InputError("coframe names must be distinct");
}

int Coframe::index_of(const std::string& n) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[i] == n) return i;
  throw InputError("unknown covector name: " + n);
}

Blade blade_from_indices(const std::vector<int>& idx, int dim) {
  Blade b = 0;
  int prev = -1;
  for (int i : idx) {
    if (i <= prev || i >= dim) throw InputError("blade indices must be strictly increasing and < dim");
    b |= Blade(1) << i;
    prev = i;
  }
  return b;
}

}  // namespace liouville
