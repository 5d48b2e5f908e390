#ifndef FOLIATION_ERRORS_HPP
#define FOLIATION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fol {

// Mathematical precondition failures carry a stable name so the CLI can
// report them and exit with status 2. Plain std::invalid_argument /
// std::runtime_error are reserved for programming errors.
class MathError : public std::runtime_error {
 public:
  MathError(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct CommutationFailure : MathError {
  explicit CommutationFailure(const std::string& what) : MathError("CommutationFailure", what) {}
};
struct TangencyFailure : MathError {
  explicit TangencyFailure(const std::string& what) : MathError("TangencyFailure", what) {}
};
struct FlatnessFailure : MathError {
  explicit FlatnessFailure(const std::string& what) : MathError("FlatnessFailure", what) {}
};
struct ChartDenominator : MathError {
  explicit ChartDenominator(const std::string& what) : MathError("ChartDenominator", what) {}
};
struct ParameterNotConstant : MathError {
  explicit ParameterNotConstant(const std::string& what) : MathError("ParameterNotConstant", what) {}
};
struct PoleOrderParity : MathError {
  explicit PoleOrderParity(const std::string& what) : MathError("PoleOrderParity", what) {}
};
struct DegeneratePairing : MathError {
  explicit DegeneratePairing(const std::string& what) : MathError("DegeneratePairing", what) {}
};
struct SingularBBlock : MathError {
  explicit SingularBBlock(const std::string& what) : MathError("SingularBBlock", what) {}
};
struct TruncationTooSmall : MathError {
  explicit TruncationTooSmall(const std::string& what) : MathError("TruncationTooSmall", what) {}
};
struct PointOffChart : MathError {
  explicit PointOffChart(const std::string& what) : MathError("PointOffChart", what) {}
};
struct NonSecondKind : MathError {
  explicit NonSecondKind(const std::string& what) : MathError("NonSecondKind", what) {}
};
struct BranchPointCollision : MathError {
  explicit BranchPointCollision(const std::string& what) : MathError("BranchPointCollision", what) {}
};
struct SubsetCapExceeded : MathError {
  explicit SubsetCapExceeded(const std::string& what) : MathError("SubsetCapExceeded", what) {}
};
struct MinorCapExceeded : MathError {
  explicit MinorCapExceeded(const std::string& what) : MathError("MinorCapExceeded", what) {}
};

}  // namespace fol

#endif
