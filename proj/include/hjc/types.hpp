#pragma once

#include <string_view>

namespace hjc {

// The two local trivializations. Chart I omits the lower half of the
// w = 0 axis, chart II the upper half.
enum class ChartTag { I, II };

enum class PointClass { Regular, LowerString, UpperString, Origin };

constexpr std::string_view to_string(ChartTag c) noexcept {
  return c == ChartTag::I ? "I" : "II";
}

constexpr std::string_view to_string(PointClass c) noexcept {
  switch (c) {
    case PointClass::Regular: return "Regular";
    case PointClass::LowerString: return "LowerString";
    case PointClass::UpperString: return "UpperString";
    case PointClass::Origin: return "Origin";
  }
  return "?";
}

// Whether a chart's diagonalizing unitary exists at a point of this class.
constexpr bool chart_admits(ChartTag chart, PointClass cls) noexcept {
  if (cls == PointClass::Origin) return false;
  return chart == ChartTag::I ? cls != PointClass::LowerString
                              : cls != PointClass::UpperString;
}

// One chart normalization denominator of the quantum model.
// row 1 is the upper (excited) block row, row 2 the lower (ground) one.
struct SectorEntry {
  ChartTag chart = ChartTag::I;
  int row = 1;
  int level = 0;
  double denominator = 0.0;
  bool singular = false;
  bool ill_conditioned = false;

  friend bool operator==(const SectorEntry&, const SectorEntry&) = default;
};

}  // namespace hjc
