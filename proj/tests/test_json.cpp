#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <iwacalc/errors.hpp>
#include <iwacalc/json_io.hpp>

#include "support.hpp"

using namespace iwacalc;
using namespace iwacalc::testing;

namespace
{

std::string slurp(const std::filesystem::path &path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("series round trip")
{
    for (int t = 0; t < 50; ++t) {
        const auto f = random_series(5, 12, 9, static_cast<long>(uniform(3)));
        const auto j = to_json(f);
        CHECK(series_from_json(parse_json(canonical_dump(j))) == f);
        CHECK(j["coeffs"][0].is_string());
    }
    const TruncatedSeries z(3, 4, 2);
    CHECK(series_from_json(to_json(z)) == z);
}

TEST_CASE("series matrix round trip")
{
    const auto fd = random_frobenius(3, 2, 2, 10, rng());
    const auto m = logarithmic_matrix(fd, 2, Side::dual, 12, 10);
    const auto back = series_matrix_from_json(parse_json(canonical_dump(to_json(m))));
    CHECK(back == m);
    REQUIRE(back.provenance().has_value());
    CHECK(back.provenance()->level == 2);
    CHECK(back.provenance()->side == Side::dual);

    const SeriesMatrix empty(3, 0, 4, 6);
    CHECK(series_matrix_from_json(to_json(empty)) == empty);
}

TEST_CASE("frobenius and iwasawa round trip")
{
    const auto fd = random_frobenius(5, 1, 3, 8, rng());
    CHECK(frobenius_from_json(to_json(fd), 3) == fd);
    const auto dual = dual_frobenius(fd);
    CHECK(frobenius_from_json(to_json(dual), 3) == dual);

    std::vector<TruncatedSeries> comps;
    for (int k = 0; k < 4; ++k) {
        comps.push_back(random_series(5, 6, 5));
    }
    const IwasawaElement x(5, comps);
    CHECK(iwasawa_from_json(parse_json(canonical_dump(to_json(x)))) == x);
}

TEST_CASE("fixtures round trip")
{
    const std::filesystem::path dir = IWACALC_FIXTURE_DIR;
    int seen = 0;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") {
            continue;
        }
        const json doc = parse_json(slurp(entry.path()));
        if (doc.contains("C")) {
            if (entry.path().filename() == "nonsquare.json") {
                CHECK_THROWS_AS(frobenius_from_json(doc, 12), UsageError);
                continue;
            }
            const auto fd = frobenius_from_json(doc, 12);
            CHECK(frobenius_from_json(parse_json(canonical_dump(to_json(fd))), 12) == fd);
        } else if (doc.contains("fX")) {
            const auto fx = series_from_json(doc["fX"]);
            const auto fy = series_from_json(doc["fY"]);
            CHECK(series_from_json(to_json(fx)) == fx);
            CHECK(series_from_json(to_json(fy)) == fy);
        }
        ++seen;
    }
    CHECK(seen >= 5);
}

TEST_CASE("schema errors")
{
    CHECK_THROWS_AS(parse_json("{not json"), SchemaError);
    CHECK_THROWS_AS(series_from_json(parse_json(R"({"p": 3, "s": 0, "N": 4})")), SchemaError);
    CHECK_THROWS_AS(series_from_json(parse_json(R"({"p": 3, "s": 0, "N": 4, "D": 1, "coeffs": ["1"]})")),
                    SchemaError);
    CHECK_THROWS_AS(series_from_json(parse_json(R"({"p": 3, "s": 0, "N": 4, "D": 0, "coeffs": ["x"]})")),
                    SchemaError);
    CHECK_THROWS_AS(frobenius_from_json(parse_json(R"({"p": 3, "g_plus": 1, "g_minus": 1, "C": "x"})"), 4),
                    SchemaError);
}

TEST_CASE("canonical dump is deterministic and sorted")
{
    const json a = parse_json(R"({"b": 1, "a": {"d": 2, "c": 3}})");
    const json b = parse_json(R"({"a": {"c": 3, "d": 2}, "b": 1})");
    CHECK(canonical_dump(a) == canonical_dump(b));
    CHECK(canonical_dump(a).find("\"a\"") < canonical_dump(a).find("\"b\""));
}
