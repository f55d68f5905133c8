#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bzeta/types.hpp"

namespace bzeta::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kPole = 2,
  kUsage = 64,
  kInternal = 70,
};

/// "3", "-2.5", "0.5+2i", "1e-3-4.5i", "2i", "-i". nullopt on anything else.
std::optional<ComplexValue> parse_complex(const std::string& text);
/// Inverse of parse_complex with 17 significant digits: "0.5+2i".
std::string format_complex(ComplexValue z);

/// Runs the command line; JSON goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bzeta::cli
