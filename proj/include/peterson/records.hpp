#pragma once

#include "peterson/monomial.hpp"
#include "peterson/subset.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace peterson {

enum class OutputFormat { Text, Json, Csv, Latex };

/// One emitted coefficient, fully self-describing. JSON output of a
/// record parses back to an equal record.
struct OutputRecord {
    std::vector<int> a, b, c;
    unsigned rank = 2;
    std::string coeff = "0"; // decimal
    int power = 0;

    static OutputRecord make(const IndexSet& a, const IndexSet& b, const IndexSet& c,
                             const Monomial& value);

    std::string to_json() const;
    static OutputRecord from_json(const std::string& text);

    bool operator==(const OutputRecord&) const = default;
};

/// Renders records in the requested format: aligned text, JSON lines,
/// CSV with a header, or a LaTeX tabular.
void write_records(std::ostream& os, const std::vector<OutputRecord>& rows, OutputFormat fmt);

/// "{1,2,4}" / "{}" for terminal tables.
std::string braced(const std::vector<int>& members);

/// Coefficient in LaTeX math, e.g. "12t^{2}", "t", "7".
std::string latex_monomial(const std::string& coeff, int power);

} // namespace peterson
