#include "peterson/records.hpp"

#include "json.hpp"

#include <ostream>
#include <sstream>

namespace peterson {

OutputRecord OutputRecord::make(const IndexSet& a, const IndexSet& b, const IndexSet& c,
                                const Monomial& value) {
    OutputRecord r;
    r.a = a.members();
    r.b = b.members();
    r.c = c.members();
    r.rank = std::max({a.rank(), b.rank(), c.rank()});
    r.coeff = value.coeff.str();
    r.power = value.power;
    return r;
}

std::string OutputRecord::to_json() const {
    nlohmann::json j{{"a", a}, {"b", b}, {"c", c}, {"n", rank}, {"coeff", coeff},
                     {"t_power", power}};
    return j.dump();
}

OutputRecord OutputRecord::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    OutputRecord r;
    r.a = j.at("a").get<std::vector<int>>();
    r.b = j.at("b").get<std::vector<int>>();
    r.c = j.at("c").get<std::vector<int>>();
    r.rank = j.at("n").get<unsigned>();
    r.coeff = j.at("coeff").get<std::string>();
    r.power = j.at("t_power").get<int>();
    return r;
}

std::string braced(const std::vector<int>& members) {
    std::string out = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members[i]);
    }
    return out + "}";
}

std::string latex_monomial(const std::string& coeff, int power) {
    if (coeff == "0") return "0";
    std::string out;
    if (coeff != "1" || power == 0) out = coeff;
    if (power == 1) out += "t";
    if (power > 1) out += "t^{" + std::to_string(power) + "}";
    return out;
}

namespace {

std::string plain(const std::vector<int>& members) {
    std::string out;
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members[i]);
    }
    return out;
}

std::string monomial_text(const OutputRecord& r) {
    if (r.coeff == "0") return "0";
    if (r.power == 0) return r.coeff;
    return r.coeff + "*t^" + std::to_string(r.power);
}

} // namespace

void write_records(std::ostream& os, const std::vector<OutputRecord>& rows, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Text: {
        size_t cwidth = 0;
        for (const auto& r : rows) cwidth = std::max(cwidth, braced(r.c).size());
        for (const auto& r : rows) {
            std::string key = braced(r.c);
            key.resize(std::max(cwidth, key.size()), ' ');
            os << key << "  " << monomial_text(r) << "\n";
        }
        break;
    }
    case OutputFormat::Json:
        for (const auto& r : rows) os << r.to_json() << "\n";
        break;
    case OutputFormat::Csv:
        os << "a,b,c,n,coeff,t_power\n";
        for (const auto& r : rows)
            os << '"' << plain(r.a) << "\",\"" << plain(r.b) << "\",\"" << plain(r.c) << "\","
               << r.rank << ',' << r.coeff << ',' << r.power << "\n";
        break;
    case OutputFormat::Latex:
        os << "\\begin{tabular}{llll}\n$A$ & $B$ & $C$ & coefficient \\\\\n\\hline\n";
        for (const auto& r : rows)
            os << "$\\{" << plain(r.a) << "\\}$ & $\\{" << plain(r.b) << "\\}$ & $\\{"
               << plain(r.c) << "\\}$ & $" << latex_monomial(r.coeff, r.power) << "$ \\\\\n";
        os << "\\end{tabular}\n";
        break;
    }
}

} // namespace peterson
