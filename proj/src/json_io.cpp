#include <iwacalc/errors.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/json_io.hpp>

namespace iwacalc
{

namespace
{

const json &field(const json &j, const char *key)
{
    if (!j.is_object()) {
        throw SchemaError(std::string("expected a JSON object holding '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw SchemaError(std::string("missing field '") + key + "'");
    }
    return *it;
}

long long_field(const json &j, const char *key)
{
    const json &v = field(j, key);
    if (!v.is_number_integer()) {
        throw SchemaError(std::string("field '") + key + "' must be an integer");
    }
    return v.get<long>();
}

unsigned long unsigned_field(const json &j, const char *key)
{
    const long v = long_field(j, key);
    if (v < 0) {
        throw SchemaError(std::string("field '") + key + "' must be non-negative");
    }
    return static_cast<unsigned long>(v);
}

mpz_class integer_value(const json &v)
{
    if (v.is_string()) {
        return parse_decimal(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return mpz_class(std::to_string(v.get<long long>()), 10);
    }
    throw SchemaError("expected a decimal string");
}

} // namespace

json to_json(const TruncatedSeries &f)
{
    json coeffs = json::array();
    for (const auto &c : f.numerators()) {
        coeffs.push_back(c.get_str());
    }
    return json{{"p", f.prime()},
                {"s", f.denominator_exp()},
                {"N", f.p_precision()},
                {"D", f.x_precision()},
                {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json &j)
{
    const unsigned long p = unsigned_field(j, "p");
    const long s = long_field(j, "s");
    const long n = long_field(j, "N");
    const unsigned long d = unsigned_field(j, "D");
    const json &coeffs = field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != d + 1) {
        throw SchemaError("series 'coeffs' must be an array of D + 1 = " + std::to_string(d + 1) + " entries");
    }
    if (!is_odd_prime(p)) {
        throw SchemaError("series 'p' must be an odd prime");
    }
    if (s < 0 || n < 0) {
        throw SchemaError("series 's' and 'N' must be non-negative");
    }
    std::vector<mpz_class> cs;
    cs.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        cs.push_back(integer_value(c));
    }
    return TruncatedSeries(p, std::move(cs), n, s);
}

json to_json(const SeriesMatrix &m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    json out{{"g", m.size()}, {"denominator_exp", m.denominator_exp()}, {"entries", std::move(rows)}};
    if (m.size() == 0) {
        out["p"] = m.prime();
        out["D"] = m.x_precision();
    }
    if (m.provenance()) {
        out["provenance"] = json{{"n", m.provenance()->level}, {"side", to_string(m.provenance()->side)}};
    }
    return out;
}

SeriesMatrix series_matrix_from_json(const json &j)
{
    const unsigned long g = unsigned_field(j, "g");
    const json &rows = field(j, "entries");
    if (!rows.is_array() || rows.size() != g) {
        throw SchemaError("matrix 'entries' must have g rows");
    }
    std::vector<TruncatedSeries> entries;
    for (const auto &row : rows) {
        if (!row.is_array() || row.size() != g) {
            throw SchemaError("matrix rows must have g entries");
        }
        for (const auto &f : row) {
            entries.push_back(series_from_json(f));
        }
    }
    const unsigned long p = g == 0 ? unsigned_field(j, "p") : entries.front().prime();
    const std::size_t d = g == 0 ? unsigned_field(j, "D") : entries.front().x_precision();
    SeriesMatrix m(p, g, d, std::move(entries));
    if (m.denominator_exp() != long_field(j, "denominator_exp")) {
        throw SchemaError("matrix 'denominator_exp' disagrees with its entries");
    }
    if (auto it = j.find("provenance"); it != j.end()) {
        const std::string side = field(*it, "side").get<std::string>();
        if (side != "primal" && side != "dual") {
            throw SchemaError("provenance side must be 'primal' or 'dual'");
        }
        m = m.with_provenance({static_cast<unsigned>(unsigned_field(*it, "n")), side == "primal" ? Side::primal : Side::dual});
    }
    return m;
}

json to_json(const FrobeniusData &fd)
{
    json rows = json::array();
    for (std::size_t i = 0; i < fd.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < fd.size(); ++j) {
            row.push_back(fd.c()(i, j).get_str());
        }
        rows.push_back(std::move(row));
    }
    return json{{"p", fd.prime()},
                {"g_plus", fd.g_plus()},
                {"g_minus", fd.g_minus()},
                {"C", std::move(rows)},
                {"N", fd.precision()},
                {"orientation", to_string(fd.orientation())}};
}

FrobeniusData frobenius_from_json(const json &j, long default_precision)
{
    const unsigned long p = unsigned_field(j, "p");
    const std::size_t g_plus = unsigned_field(j, "g_plus");
    const std::size_t g_minus = unsigned_field(j, "g_minus");
    const json &c = field(j, "C");
    if (!c.is_array()) {
        throw SchemaError("'C' must be an array of rows");
    }
    std::vector<std::vector<mpz_class>> rows;
    for (const auto &row : c) {
        if (!row.is_array()) {
            throw SchemaError("'C' rows must be arrays");
        }
        std::vector<mpz_class> r;
        for (const auto &x : row) {
            r.push_back(integer_value(x));
        }
        rows.push_back(std::move(r));
    }
    const long precision = j.contains("N") ? long_field(j, "N") : default_precision;
    FrobeniusData fd = build_frobenius(rows, g_minus, g_plus, p, precision);
    if (auto it = j.find("orientation"); it != j.end()) {
        const std::string o = it->get<std::string>();
        if (o == "dual") {
            return FrobeniusData(fd.c(), g_minus, g_plus, Side::dual);
        }
        if (o != "primal") {
            throw SchemaError("'orientation' must be 'primal' or 'dual'");
        }
    }
    return fd;
}

json to_json(const IwasawaElement &x)
{
    json comps = json::object();
    for (std::size_t eta = 0; eta < x.components().size(); ++eta) {
        comps[std::to_string(eta)] = to_json(x.component(eta));
    }
    return json{{"p", x.prime()}, {"components", std::move(comps)}};
}

IwasawaElement iwasawa_from_json(const json &j)
{
    const unsigned long p = unsigned_field(j, "p");
    if (!is_odd_prime(p)) {
        throw SchemaError("'p' must be an odd prime");
    }
    const json &comps = field(j, "components");
    std::vector<TruncatedSeries> cs;
    for (unsigned long eta = 0; eta + 1 < p; ++eta) {
        cs.push_back(series_from_json(field(comps, std::to_string(eta).c_str())));
    }
    if (comps.size() != p - 1) {
        throw SchemaError("'components' must have exactly p - 1 entries");
    }
    return IwasawaElement(p, std::move(cs));
}

json to_json(const WeierstrassData &w)
{
    return json{{"mu", w.mu},
                {"lambda", w.lambda},
                {"distinguished", to_json(w.distinguished)},
                {"unit", to_json(w.unit)},
                {"precision", w.precision},
                {"certified", w.certified}};
}

json to_json(const CheckReport &r)
{
    json out{{"check", r.check},
             {"pass", r.pass},
             {"n", r.n},
             {"absolute_precision", r.absolute_precision},
             {"verified_digits", r.verified_digits}};
    if (r.witness) {
        out["witness"] = json{{"row", r.witness->row},
                              {"col", r.witness->col},
                              {"coefficient", r.witness->coefficient},
                              {"lhs", r.witness->lhs},
                              {"rhs", r.witness->rhs}};
    }
    if (!r.parts.empty()) {
        json parts = json::array();
        for (const auto &part : r.parts) {
            parts.push_back(to_json(part));
        }
        out["parts"] = std::move(parts);
    }
    return out;
}

json to_json(const ComparisonReport &r)
{
    json out{{"check", "functional_equation"},
             {"pass", r.pass},
             {"mu", {r.mu[0], r.mu[1]}},
             {"lambda", {r.lambda[0], r.lambda[1]}},
             {"certified", {r.certified[0], r.certified[1]}},
             {"precision", r.precision}};
    if (r.witness) {
        out["witness"] = *r.witness;
    }
    return out;
}

json to_json(const std::vector<ConvergenceStep> &steps)
{
    json out = json::array();
    for (const auto &s : steps) {
        json j{{"n", s.n}};
        if (s.error) {
            j["error"] = *s.error;
        } else {
            j["agreement_valuation"] = s.agreement_valuation;
            j["absolute_precision"] = s.absolute_precision;
            j["lower_bound"] = s.lower_bound;
        }
        out.push_back(std::move(j));
    }
    return out;
}

json to_json(const EulerExponents &e)
{
    return json{{"global_exp", e.global.get_str()}, {"local_exp", e.local.get_str()}};
}

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &err) {
        throw SchemaError(std::string("invalid JSON: ") + err.what());
    }
}

std::string canonical_dump(const json &j)
{
    return j.dump(2) + "\n";
}

} // namespace iwacalc
