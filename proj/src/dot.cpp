#include "omlat/dot.hpp"

namespace omlat {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const FiniteLattice& l, const std::vector<std::string>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != l.size())
    fail(ErrorCode::BadInput, "label count does not match the element count");
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (ElemId x = 0; x < l.size(); ++x) {
    const std::string label = labels.empty() ? std::to_string(x) : labels[static_cast<std::size_t>(x)];
    out += "  " + std::to_string(x) + " [label=" + quoted(label) + "];\n";
  }
  for (const auto& [lo, hi] : hasse_covers(l))
    out += "  " + std::to_string(lo) + " -> " + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace omlat
