#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qproof/formula.hpp"
#include "qproof/mres.hpp"

namespace qproof::testing {

std::string fixture_path(std::string_view relative);
std::string read_fixture(std::string_view relative);

struct MResFixture {
  std::string name;
  QbfFormula formula;
  MResProof proof;
};

/// Every `<name>.mres` under fixtures/mres with the formula its header
/// names, sorted by name.
std::vector<MResFixture> mres_fixtures();
MResFixture mres_fixture(std::string_view name);

}  // namespace qproof::testing
