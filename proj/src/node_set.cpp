#include "cutcover/node_set.hpp"

namespace cutcover {

std::vector<std::size_t> NodeSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  return out;
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  for (auto v : members()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace cutcover
