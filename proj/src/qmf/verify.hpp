#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmf::verify {

struct Check {
    std::string name;
    bool pass;
    std::string detail;  // residual location or mismatch description on failure
};

struct Report {
    std::vector<Check> checks;

    int failures() const;
    void add(std::string name, bool pass, std::string detail = "");
    void merge(const Report& other);
    /// "PASS name" / "FAIL name: detail" lines plus a summary line.
    std::string str(bool quiet = false) const;
};

Report systems(std::int64_t order);
Report sl2();
Report identities(std::int64_t order);
Report chazy(std::int64_t order);
Report serre(std::int64_t order);
Report pushforward();
Report bases();
Report all(std::int64_t order);

/// Dispatch by suite name: all, systems, sl2, identities, chazy, serre,
/// pushforward, bases. Unknown names raise UnknownName.
Report run_suite(const std::string& suite, std::int64_t order);

}  // namespace qmf::verify
