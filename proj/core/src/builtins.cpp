#include "gmalie/builtins.hpp"

namespace gmalie {

std::string_view to_string(BuiltinKind k) {
  switch (k) {
    case BuiltinKind::FullMatrix:
      return "full-matrix";
    case BuiltinKind::UpperTriangular:
      return "upper-triangular";
    case BuiltinKind::LowerTriangular:
      return "lower-triangular";
    case BuiltinKind::ZeroPairing:
      return "zero-pairing";
  }
  return "unknown";
}

BuiltinKind parse_builtin_kind(std::string_view text) {
  for (auto k : {BuiltinKind::FullMatrix, BuiltinKind::UpperTriangular, BuiltinKind::LowerTriangular,
                 BuiltinKind::ZeroPairing}) {
    if (text == to_string(k)) return k;
  }
  throw ParseError("unknown builtin kind '" + std::string(text) +
                   "' (expected full-matrix, upper-triangular, lower-triangular or zero-pairing)");
}

}  // namespace gmalie
