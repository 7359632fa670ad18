#ifndef TREESHAPE_MODEL_HPP_
#define TREESHAPE_MODEL_HPP_

#include <string>

namespace treeshape {

// Yule-Harding-Kingman (attach to a random pendant edge) or proportional to
// distinguishable arrangements (attach to a random edge).
enum class Model { yhk, pda };

auto to_string(Model m) -> std::string;
// Accepts "yhk" / "pda" in any case; throws std::invalid_argument otherwise.
auto parse_model(const std::string& text) -> Model;

}  // namespace treeshape

#endif  // TREESHAPE_MODEL_HPP_
