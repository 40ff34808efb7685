#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "padicsum/padic_num.hpp"
#include "padicsum/polynomial.hpp"

#include "json.hpp"

namespace padicsum::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Parses an integer-coefficient polynomial in `n` built from integers, n,
/// parentheses and + - * ^ (e.g. "n^3 - 2n - 1", "(n+1)*(n+2)").
/// Throws std::invalid_argument with the offending position on bad input.
RationalPolynomial parse_polynomial(std::string_view text);

/// Comma-separated list of integers, e.g. "2,1".
std::vector<long> parse_int_list(std::string_view text);

nlohmann::ordered_json padic_to_json(const PadicApprox& x);
/// JSON integer when it fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json integer_to_json(const Integer& n);

/// Runs the CLI on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicsum::cli
