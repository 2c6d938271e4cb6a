#include "hurwitz/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hurwitz {

namespace {

mpz_class parse_mpz(std::string_view text) {
    mpz_class n;
    if (text.empty() || mpz_set_str(n.get_mpz_t(), std::string(text).c_str(), 10) != 0)
        throw ParseError("bad integer payload '" + std::string(text) + "'");
    return n;
}

} // namespace

Value parse_payload(const Ring& ring, std::string_view text) {
    if (ring.kind() == RingKind::rationals) {
        const std::size_t slash = text.find('/');
        if (slash == std::string_view::npos)
            return Value(ring, mpq_class(parse_mpz(text)));
        const mpz_class num = parse_mpz(text.substr(0, slash));
        const mpz_class den = parse_mpz(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in payload '" + std::string(text) + "'");
        return Value(ring, mpq_class(num, den)); // canonicalized by Value
    }
    if (text.find('/') != std::string_view::npos)
        throw ParseError("fraction payload '" + std::string(text) + "' in ring " + ring.tag());
    return Value(ring, parse_mpz(text));
}

Series parse_series(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad series file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("ring") || !doc.contains("precision") ||
        !doc.contains("coeffs"))
        throw ParseError("series file needs fields ring, precision, coeffs");
    if (!doc["ring"].is_string() || !doc["precision"].is_number_integer() ||
        !doc["coeffs"].is_array())
        throw ParseError("series file field types: ring string, precision integer, coeffs array");

    const Ring ring = Ring::from_tag(doc["ring"].get<std::string>());
    const long long precision = doc["precision"].get<long long>();
    if (precision < 1)
        throw ParseError("precision must be >= 1");
    if (doc["coeffs"].size() != static_cast<std::size_t>(precision))
        throw ParseError("coeffs length " + std::to_string(doc["coeffs"].size()) +
                         " does not match precision " + std::to_string(precision));

    std::vector<Value> coeffs;
    coeffs.reserve(doc["coeffs"].size());
    for (const auto& item : doc["coeffs"]) {
        if (!item.is_string())
            throw ParseError("coefficients must be payload strings");
        coeffs.push_back(parse_payload(ring, item.get<std::string>()));
    }
    return Series(ring, std::move(coeffs));
}

Series parse_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series(buf.str());
}

std::string emit_series(const Series& a) {
    nlohmann::json doc;
    doc["ring"] = a.ring().tag();
    doc["precision"] = a.precision();
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < a.precision(); ++i)
        coeffs.push_back(a[i].str());
    doc["coeffs"] = std::move(coeffs);
    return doc.dump(2) + "\n";
}

void emit_series_file(const Series& a, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write '" + path.string() + "'");
    out << emit_series(a);
}

} // namespace hurwitz
