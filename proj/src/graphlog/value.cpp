#include "graphlog/value.hpp"

namespace graphlog {

std::vector<std::string> split_key_path(const std::string& dotted) {
  std::vector<std::string> parts;
  if (dotted.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = dotted.find('.', start);
    if (dot == std::string::npos) {
      parts.push_back(dotted.substr(start));
      break;
    }
    parts.push_back(dotted.substr(start, dot - start));
    start = dot + 1;
  }
  return parts;
}

const Value* value_at_path(const Value& root, const std::vector<std::string>& path) {
  const Value* cur = &root;
  for (const auto& key : path) {
    if (!cur->is_object()) return nullptr;
    auto it = cur->find(key);
    if (it == cur->end()) return nullptr;
    cur = &*it;
  }
  return cur;
}

}  // namespace graphlog
