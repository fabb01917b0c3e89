#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "qproof/qdimacs.hpp"

namespace qproof::testing {

namespace fs = std::filesystem;

std::string fixture_path(std::string_view relative) {
  return (fs::path(QPROOF_FIXTURE_DIR) / fs::path(relative)).string();
}

std::string read_fixture(std::string_view relative) {
  std::ifstream in(fixture_path(relative), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + std::string(relative));
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

MResFixture mres_fixture(std::string_view name) {
  const std::string base = "mres/" + std::string(name);
  MResProof proof = parse_mres(read_fixture(base + ".mres"));
  const std::string formula_file = proof.formula_ref.value_or(std::string(name) + ".qdimacs");
  return {std::string(name), parse_qdimacs(read_fixture("mres/" + formula_file)), std::move(proof)};
}

std::vector<MResFixture> mres_fixtures() {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(fixture_path("mres"))) {
    if (entry.path().extension() == ".mres") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  std::vector<MResFixture> out;
  for (const auto& n : names) out.push_back(mres_fixture(n));
  return out;
}

}  // namespace qproof::testing
