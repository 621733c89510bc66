#ifndef GSP4_ERRORS_HPP
#define GSP4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsp4 {

struct NotSimilitude : std::runtime_error {
  explicit NotSimilitude(const std::string& m) : std::runtime_error(m) {}
};
struct SingularAutomorphyFactor : std::runtime_error {
  explicit SingularAutomorphyFactor(const std::string& m) : std::runtime_error(m) {}
};
struct WrongComponent : std::runtime_error {
  explicit WrongComponent(const std::string& m) : std::runtime_error(m) {}
};
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& m) : std::runtime_error(m) {}
};
struct NotInAlgebra : std::runtime_error {
  explicit NotInAlgebra(const std::string& m) : std::runtime_error(m) {}
};
struct SingularConstantTerm : std::runtime_error {
  explicit SingularConstantTerm(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidWeights : std::runtime_error {
  explicit InvalidWeights(const std::string& m) : std::runtime_error(m) {}
};
struct NotRepresentable : std::runtime_error {
  explicit NotRepresentable(const std::string& m) : std::runtime_error(m) {}
};
struct SingularBase : std::runtime_error {
  explicit SingularBase(const std::string& m) : std::runtime_error(m) {}
};
struct ChartSingularity : std::runtime_error {
  explicit ChartSingularity(const std::string& m) : std::runtime_error(m) {}
};
struct JetOrderExhausted : std::runtime_error {
  explicit JetOrderExhausted(const std::string& m) : std::runtime_error(m) {}
};
struct PoleOfGamma : std::runtime_error {
  explicit PoleOfGamma(const std::string& m) : std::runtime_error(m) {}
};
struct PoleOfQ : std::runtime_error {
  explicit PoleOfQ(const std::string& m) : std::runtime_error(m) {}
};
struct ParameterRegionUnsupported : std::runtime_error {
  explicit ParameterRegionUnsupported(const std::string& m) : std::runtime_error(m) {}
};
struct QuadratureNotConverged : std::runtime_error {
  explicit QuadratureNotConverged(const std::string& m) : std::runtime_error(m) {}
};
struct DivergentRegion : std::runtime_error {
  explicit DivergentRegion(const std::string& m) : std::runtime_error(m) {}
};
struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& m) : std::runtime_error(m) {}
};

} // namespace gsp4

#endif
