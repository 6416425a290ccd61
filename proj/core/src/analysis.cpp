#include "gmalie/analysis.hpp"

namespace gmalie {

std::string_view to_string(HypothesisSet s) {
  switch (s) {
    case HypothesisSet::CentralTorsion:
      return "central-torsion";
    case HypothesisSet::ModuleAnnihilator:
      return "module-annihilator";
  }
  return "unknown";
}

}  // namespace gmalie
