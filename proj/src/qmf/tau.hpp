#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf::tau {

enum class TauKind { Tau, Tau2, Tau3 };
enum class TauMethod { EtaProduct, LogRecursion, ExplicitFormula };

std::optional<TauKind> parse_tau_kind(const std::string& s);
std::optional<TauMethod> parse_tau_method(const std::string& s);

struct TauTable {
    TauKind which;
    TauMethod method;
    std::vector<Int> values;  // values[n] for 1 <= n <= N; values[0] = 0

    const Int& at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
    std::int64_t size() const { return static_cast<std::int64_t>(values.size()) - 1; }
};

/// sigma(n) for 2 <= n <= n_max from the even/odd recurrence seeded by
/// sigma(1) = 1; every division must be exact (NonIntegralResult otherwise).
std::vector<Int> sigma_recurrence_table(std::int64_t n_max);
Int sigma_recurrence(std::int64_t n);

TauTable tau_table(TauKind which, TauMethod method, std::int64_t n_max);
Int tau_value(TauKind which, TauMethod method, std::int64_t n);

struct CongruenceRule {
    std::string id;
    std::string description;
};

const std::vector<CongruenceRule>& congruence_rules();

struct ScanResult {
    bool violation = false;
    std::int64_t at = 0;  // argument of the first violating instance
};

ScanResult congruence_scan(const std::string& rule_id, std::int64_t up_to);

/// Shares sigma/tau tables across several rule scans.
class CongruenceScanner {
public:
    explicit CongruenceScanner(std::int64_t up_to);
    ScanResult scan(const std::string& rule_id) const;
    std::int64_t up_to() const { return up_to_; }

private:
    std::int64_t up_to_;
    std::vector<Int> sigma_;
    std::vector<Int> tau_;
    std::vector<Int> tau2_;
    std::vector<Int> tau3_;
};

/// OEIS b-file lines "n a(n)", LF-separated, starting at the given offset.
void write_bfile(std::ostream& out, const std::vector<Int>& values, std::int64_t offset);

}  // namespace qmf::tau
