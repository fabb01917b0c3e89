#pragma once

#include <cstdint>
#include <string_view>

namespace qproof {

enum class Verdict : std::uint8_t {
  VerifiedRefutation,  // every step accepted and the empty clause was derived
  VerifiedDerivation,  // every step accepted, no empty clause
  Rejected,
};

std::string_view to_string(Verdict v);

}  // namespace qproof
