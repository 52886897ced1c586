#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dgf/catalog.hpp"
#include "dgf/selftest.hpp"

namespace dgf::cli {

enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kUsage = 2,
  kInputFile = 3,
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::string family;
  int max_n = 0;
  bool numeric = false;
  long w_value = 1;
  long u_value = 1;
  Format format = Format::Csv;
  std::optional<std::string> out;
  std::optional<std::string> custom_family;

  CoeffMode mode() const { return numeric ? CoeffMode::numeric(w_value, u_value) : CoeffMode::polynomial(); }
};

/// Malformed custom family file; line is 1-based.
class CustomFamilyError : public std::runtime_error {
 public:
  CustomFamilyError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses lines "n: c_0 c_1 ... c_m" giving [w^m] of the EGF coefficient a_n.
/// Missing n means 0; blank lines and lines starting with '#' are skipped.
/// Returns a Polynomial-mode EGF of the given order.
Series parse_custom_family(std::istream& in, std::size_t order);

std::string format_csv(const FamilyTable& table);
std::string format_json(const FamilyTable& table, bool numeric);

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                 const selftest::FamilyComputer& compute = selftest::default_computer());
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dgf::cli
