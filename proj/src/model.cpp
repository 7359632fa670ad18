#include "treeshape/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace treeshape {

auto to_string(Model m) -> std::string { return m == Model::yhk ? "yhk" : "pda"; }

auto parse_model(const std::string& text) -> Model {
  auto lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "yhk") {
    return Model::yhk;
  }
  if (lower == "pda") {
    return Model::pda;
  }
  throw std::invalid_argument("unknown model '" + text + "' (expected yhk or pda)");
}

}  // namespace treeshape
