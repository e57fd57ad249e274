#include "weid/ring.hpp"

namespace weid {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables)
    throw ResourceLimitError("ambient ring exceeds the " + std::to_string(kMaxVariables) +
                             "-variable cap (" + std::to_string(names_.size()) + " requested)");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("empty variable name");
    auto [it, fresh] = index_.emplace(names_[i], i);
    (void)it;
    if (!fresh) throw DomainError("duplicate variable name: " + names_[i]);
  }
}

std::size_t Ring::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("unknown variable: " + name);
  return it->second;
}

}  // namespace weid
