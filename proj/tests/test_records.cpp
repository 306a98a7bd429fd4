#include "doctest.h"

#include "peterson/records.hpp"

#include <sstream>

using namespace peterson;

namespace {

OutputRecord sample() {
    return OutputRecord::make(IndexSet(6, {1, 2}), IndexSet(6, {2, 3, 4}),
                              IndexSet(6, {1, 2, 3, 4}), Monomial{12, 1});
}

} // namespace

TEST_CASE("records round-trip through JSON") {
    OutputRecord r = sample();
    CHECK(OutputRecord::from_json(r.to_json()) == r);

    OutputRecord empty = OutputRecord::make(IndexSet(2), IndexSet(2), IndexSet(2),
                                            Monomial::one());
    CHECK(OutputRecord::from_json(empty.to_json()) == empty);
    CHECK_THROWS(OutputRecord::from_json("{\"a\": [1]}"));
}

TEST_CASE("braced sets read like set notation") {
    CHECK(braced({1, 2, 4}) == "{1,2,4}");
    CHECK(braced({}) == "{}");
}

TEST_CASE("latex coefficients suppress redundant factors") {
    CHECK(latex_monomial("0", 0) == "0");
    CHECK(latex_monomial("7", 0) == "7");
    CHECK(latex_monomial("1", 1) == "t");
    CHECK(latex_monomial("1", 3) == "t^{3}");
    CHECK(latex_monomial("12", 2) == "12t^{2}");
}

TEST_CASE("text output aligns the target column") {
    std::ostringstream os;
    write_records(os, {sample()}, OutputFormat::Text);
    CHECK(os.str() == "{1,2,3,4}  12*t^1\n");
}

TEST_CASE("json output emits one record per line") {
    std::ostringstream os;
    write_records(os, {sample(), sample()}, OutputFormat::Json);
    std::string text = os.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    std::string first = text.substr(0, text.find('\n'));
    CHECK(OutputRecord::from_json(first) == sample());
}

TEST_CASE("csv output starts with the header") {
    std::ostringstream os;
    write_records(os, {sample()}, OutputFormat::Csv);
    std::string text = os.str();
    CHECK(text.rfind("a,b,c,n,coeff,t_power\n", 0) == 0);
    CHECK(text.find("\"1,2\",\"2,3,4\",\"1,2,3,4\",6,12,1\n") != std::string::npos);
}

TEST_CASE("latex output wraps rows in a tabular") {
    std::ostringstream os;
    write_records(os, {sample()}, OutputFormat::Latex);
    std::string text = os.str();
    CHECK(text.find("\\begin{tabular}") != std::string::npos);
    CHECK(text.find("$12t$") != std::string::npos);
    CHECK(text.find("\\end{tabular}") != std::string::npos);
}
