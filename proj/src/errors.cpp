#include "citeforge/errors.hpp"

namespace citeforge {

std::string Error::diagnostic() const {
  std::string out;
  if (!file_.empty()) out += file_ + ":";
  if (line_ > 0) out += std::to_string(line_) + ":";
  if (!out.empty()) out += " ";
  return out + what();
}

}  // namespace citeforge
