#pragma once

// Smooth real test functions on either model, addressed by string id.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sjgeo/chart.hpp"
#include "sjgeo/geometry.hpp"

namespace sjgeo {

struct ScalarField {
  using Rule = std::function<double(const CMatrix& mat, const CMatrix& vec)>;

  std::string id;
  Model model = Model::upper;
  ChartLayout layout;
  Rule rule;

  double operator()(std::span<const double> x) const;
  double at(const CMatrix& mat, const CMatrix& vec) const { return rule(mat, vec); }
};

/// const, lin, quad, absW2, absEta2, gauss, prod, logdet.
const std::vector<std::string>& field_ids();

/// Build one field. Random coefficients come from `seed`; the Gaussian bump
/// is centred at `center` when given, otherwise at a random point of the model.
ScalarField make_field(const std::string& id, Model model, const ChartLayout& layout, std::uint64_t seed,
                       const std::optional<RVector>& center = std::nullopt);

/// Every field of field_ids(), deterministic in seed.
std::vector<ScalarField> test_field_suite(Model model, const ChartLayout& layout, std::uint64_t seed,
                                          const std::optional<RVector>& center = std::nullopt);

/// f ∘ φ_g for the upper-model action.
ScalarField compose(const ScalarField& f, const JacobiElement& g);
/// f ∘ φ_g for the disk-model action.
ScalarField compose(const ScalarField& f, const JacobiStarElement& g);

}  // namespace sjgeo
