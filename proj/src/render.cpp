#include "symdet/render.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symdet {

std::string to_decimal(const BigInt& v)
{
    return v.get_str(10);
}

BigInt from_decimal(const std::string& s)
{
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    return v;
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("JSON field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::optional<int> optional_int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (v.is_null() || v.is_string())
        return std::nullopt;
    return int_field(j, key);
}

constexpr const char* not_computed = "not computed";

} // namespace

Json to_json(const BettiTable& table)
{
    Json entries = Json::array();
    for (const auto& e : table.entries()) {
        Json parts = Json::array();
        for (const auto& p : e.partitions)
            parts.push_back(p.to_string());
        entries.push_back(Json{{"i", e.hom_index}, {"degree", e.degree}, {"rank", to_decimal(e.multiplicity)}, {"partitions", parts}});
    }
    return Json{{"n", table.params().n},
                {"t", table.params().t},
                {"char", "0"},
                {"projdim", table.projdim()},
                {"entries", entries}};
}

BettiTable betti_table_from_json(const Json& j)
{
    const RingParams params = RingParams::make(int_field(j, "n"), int_field(j, "t"));
    if (field(j, "char") != "0")
        throw std::invalid_argument("only characteristic 0 tables are supported");
    const Json& list = field(j, "entries");
    if (!list.is_array())
        throw std::invalid_argument("\"entries\" must be an array");
    std::vector<BettiEntry> entries;
    for (const auto& e : list) {
        BettiEntry be;
        be.hom_index = int_field(e, "i");
        be.degree = int_field(e, "degree");
        be.multiplicity = from_decimal(field(e, "rank").get<std::string>());
        for (const auto& p : field(e, "partitions"))
            be.partitions.push_back(Partition::parse(p.get<std::string>()));
        entries.push_back(std::move(be));
    }
    return BettiTable(params, int_field(j, "projdim"), std::move(entries));
}

Json to_json(const Classification& c)
{
    Json obstruction = nullptr;
    if (c.obstruction) {
        const auto& o = *c.obstruction;
        obstruction = Json{{"lower", to_decimal(o.lower_bound)},
                           {"upper", to_decimal(o.upper_bound)},
                           {"passes", o.passes},
                           {"mu_m", o.mu_m},
                           {"beta_last", to_decimal(o.beta_last)},
                           {"beta_prev", to_decimal(o.beta_prev)},
                           {"reduced_lhs", to_decimal(o.reduced_lhs)},
                           {"reduced_rhs", to_decimal(o.reduced_rhs)}};
    }
    Json betti = Json::array();
    for (const auto& b : c.betti)
        betti.push_back(Json{{"i", b.hom_index}, {"degree", b.degree}, {"rank", to_decimal(b.rank)}});

    Json j;
    j["family"] = std::string(to_string(c.family));
    j["n"] = c.n;
    j["t"] = c.t ? Json(*c.t) : Json(nullptr);
    j["dim"] = c.dim;
    j["projdim"] = c.projdim ? Json(*c.projdim) : Json(not_computed);
    j["a_invariant"] = c.a_invariant;
    j["top_shift"] = c.top_shift ? Json(*c.top_shift) : Json(nullptr);
    j["cm_type"] = c.cm_type ? Json(to_decimal(*c.cm_type)) : Json(not_computed);
    j["gorenstein"] = c.gorenstein;
    j["almost_gorenstein"] = c.almost_gorenstein;
    j["obstruction"] = obstruction;
    j["betti"] = betti;
    j["notes"] = c.notes;
    return j;
}

Classification classification_from_json(const Json& j)
{
    Classification c;
    c.family = parse_family(field(j, "family").get<std::string>());
    c.n = int_field(j, "n");
    c.t = optional_int_field(j, "t");
    c.dim = int_field(j, "dim");
    c.projdim = optional_int_field(j, "projdim");
    c.a_invariant = int_field(j, "a_invariant");
    c.top_shift = optional_int_field(j, "top_shift");
    const std::string cm = field(j, "cm_type").get<std::string>();
    if (cm != not_computed)
        c.cm_type = from_decimal(cm);
    c.gorenstein = field(j, "gorenstein").get<bool>();
    c.almost_gorenstein = field(j, "almost_gorenstein").get<bool>();
    const Json& o = field(j, "obstruction");
    if (!o.is_null()) {
        ObstructionReport r;
        r.lower_bound = from_decimal(field(o, "lower").get<std::string>());
        r.upper_bound = from_decimal(field(o, "upper").get<std::string>());
        r.passes = field(o, "passes").get<bool>();
        r.mu_m = int_field(o, "mu_m");
        r.beta_last = from_decimal(field(o, "beta_last").get<std::string>());
        r.beta_prev = from_decimal(field(o, "beta_prev").get<std::string>());
        r.reduced_lhs = from_decimal(field(o, "reduced_lhs").get<std::string>());
        r.reduced_rhs = from_decimal(field(o, "reduced_rhs").get<std::string>());
        c.obstruction = r;
    }
    for (const auto& b : field(j, "betti"))
        c.betti.push_back(ShiftedBetti{int_field(b, "i"), int_field(b, "degree"), from_decimal(field(b, "rank").get<std::string>())});
    c.notes = field(j, "notes").get<std::string>();
    return c;
}

std::string render_betti_diagram(const BettiTable& table)
{
    const int cols = std::max(table.max_index(), 0) + 1;
    int row_lo = 0;
    int row_hi = 0;
    std::map<std::pair<int, int>, BigInt> cell; // (row, column)
    for (const auto& e : table.entries()) {
        const int row = e.degree - e.hom_index;
        row_lo = std::min(row_lo, row);
        row_hi = std::max(row_hi, row);
        cell[{row, e.hom_index}] += e.multiplicity;
    }

    std::vector<std::string> totals;
    std::size_t width = 1;
    for (int i = 0; i < cols; ++i) {
        totals.push_back(to_decimal(table.beta(i)));
        width = std::max(width, totals.back().size());
        width = std::max(width, std::to_string(i).size());
    }

    std::ostringstream out;
    auto cell_text = [&](const std::string& v) { return ' ' + std::string(width - v.size(), ' ') + v; };
    out << "symmetric determinantal ring n=" << table.params().n << " t=" << table.params().t << " (characteristic 0)\n";
    out << "      ";
    for (int i = 0; i < cols; ++i)
        out << cell_text(std::to_string(i));
    out << "\ntotal:";
    for (const auto& v : totals)
        out << cell_text(v);
    out << '\n';
    for (int row = row_lo; row <= row_hi; ++row) {
        out << std::setw(5) << row << ':';
        for (int i = 0; i < cols; ++i) {
            auto it = cell.find({row, i});
            out << cell_text(it == cell.end() ? std::string(".") : to_decimal(it->second));
        }
        out << '\n';
    }
    return out.str();
}

std::string render_classification(const Classification& c)
{
    std::ostringstream out;
    out << to_string(c.family) << " n=" << c.n;
    if (c.t)
        out << " t=" << *c.t;
    out << ": dim=" << c.dim << " projdim=" << (c.projdim ? std::to_string(*c.projdim) : not_computed)
        << " a=" << c.a_invariant << " type=" << (c.cm_type ? to_decimal(*c.cm_type) : not_computed)
        << " gorenstein=" << (c.gorenstein ? "yes" : "no") << " almost_gorenstein=" << (c.almost_gorenstein ? "yes" : "no") << '\n';
    if (c.obstruction) {
        const auto& o = *c.obstruction;
        out << "obstruction: " << to_decimal(o.lower_bound) << " <= " << to_decimal(o.upper_bound) << " "
            << (o.passes ? "holds" : "fails") << " (reduced: " << to_decimal(o.reduced_lhs) << " <= " << to_decimal(o.reduced_rhs)
            << ")\n";
    }
    if (!c.betti.empty()) {
        out << "betti:";
        for (const auto& b : c.betti)
            out << ' ' << to_decimal(b.rank) << "(" << b.degree << ")";
        out << '\n';
    }
    out << "notes: " << c.notes << '\n';
    return out.str();
}

} // namespace symdet
