#include "pio/io.hpp"

#include "pio/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pio {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& known,
                         const char* what) {
    for (const auto& [key, value] : j.items())
        if (!known.contains(key))
            throw ParseError(std::string(what) + ": unknown key '" + key + "'");
}

const Json& require_field(const Json& j, const std::string& name) {
    if (!j.contains(name)) throw ParseError("missing field '" + name + "'");
    return j.at(name);
}

bool is_count(const Json& v, std::size_t min_value) {
    return v.is_number_integer() && v.get<long long>() >= static_cast<long long>(min_value);
}

std::size_t parse_count(const Json& j, const std::string& field) {
    const Json& v = require_field(j, field);
    if (!is_count(v, 0)) throw ParseError(field + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

// Entry arrays are arrays of arrays of strings; the row count is dictated by
// the array, the column count by `cols`. Each parse failure names the cell.
Mat parse_matrix(const Json& v, const std::string& field, std::size_t rows, std::size_t cols,
                 bool check_rows) {
    if (!v.is_array()) throw ParseError(field + ": expected an array of rows");
    if (check_rows && v.size() != rows)
        throw DimensionMismatch(field + ": expected " + std::to_string(rows) + " rows, got " +
                                std::to_string(v.size()));
    Mat m(v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Json& row = v.at(i);
        if (!row.is_array() || row.size() != cols)
            throw DimensionMismatch(field + "[" + std::to_string(i) + "]: expected " +
                                    std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) {
            const Json& cell = row.at(j);
            const std::string where =
                field + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (!cell.is_string()) throw ParseError(where + ": expected a string entry");
            try {
                m(i, j) = parse_rational(cell.get<std::string>());
            } catch (const ParseError& e) {
                throw ParseError(where + ": " + e.what());
            }
        }
    }
    return m;
}

std::vector<std::size_t> parse_counts(const Json& j, const std::string& field,
                                      std::size_t min_value) {
    const Json& v = require_field(j, field);
    if (!v.is_array()) throw ParseError(field + ": expected an array of sizes");
    std::vector<std::size_t> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Json& cell = v.at(i);
        if (!is_count(cell, min_value))
            throw ParseError(field + "[" + std::to_string(i) + "]: expected an integer >= " +
                             std::to_string(min_value));
        out.push_back(cell.get<std::size_t>());
    }
    return out;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace

DescriptorSystem parse_system_json(const Json& j) {
    if (!j.is_object()) throw ParseError("system file: expected a JSON object");
    reject_unknown_keys(j, {"m", "n", "p", "r", "E", "A", "C", "L"}, "system file");

    const std::size_t m = parse_count(j, "m");
    const std::size_t n = parse_count(j, "n");
    const std::size_t p = parse_count(j, "p");
    const std::size_t r = parse_count(j, "r");

    Mat e = parse_matrix(require_field(j, "E"), "E", m, n, true);
    Mat a = parse_matrix(require_field(j, "A"), "A", m, n, true);
    Mat c = parse_matrix(require_field(j, "C"), "C", p, n, true);
    Mat l = parse_matrix(require_field(j, "L"), "L", r, n, true);
    return DescriptorSystem(std::move(e), std::move(a), std::move(c), std::move(l));
}

DescriptorSystem read_system_file(const std::string& path) {
    return parse_system_json(load_json(path));
}

KcfSystem parse_kcf_json(const Json& j) {
    if (!j.is_object()) throw ParseError("kcf file: expected a JSON object");
    reject_unknown_keys(j, {"epsilon", "jf", "sigma", "eta", "C", "L"}, "kcf file");

    std::vector<JordanBlock> jf;
    {
        const Json& v = require_field(j, "jf");
        if (!v.is_array()) throw ParseError("jf: expected an array of blocks");
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Json& blockj = v.at(i);
            const std::string where = "jf[" + std::to_string(i) + "]";
            if (!blockj.is_object()) throw ParseError(where + ": expected an object");
            reject_unknown_keys(blockj, {"eigenvalue", "size"}, where.c_str());
            const Json& ev = require_field(blockj, "eigenvalue");
            if (!ev.is_string()) throw ParseError(where + ".eigenvalue: expected a string");
            const Json& sz = require_field(blockj, "size");
            if (!is_count(sz, 1)) throw ParseError(where + ".size: expected an integer >= 1");
            Rational lambda;
            try {
                lambda = parse_rational(ev.get<std::string>());
            } catch (const ParseError& e) {
                throw ParseError(where + ".eigenvalue: " + e.what());
            }
            jf.push_back({lambda, sz.get<std::size_t>()});
        }
    }

    KcfSpec spec(parse_counts(j, "epsilon", 0), std::move(jf), parse_counts(j, "sigma", 1),
                 parse_counts(j, "eta", 0));
    const std::size_t n = spec.cols();
    Mat c = parse_matrix(require_field(j, "C"), "C", 0, n, false);
    Mat l = parse_matrix(require_field(j, "L"), "L", 0, n, false);
    return KcfSystem(std::move(spec), std::move(c), std::move(l));
}

KcfSystem read_kcf_file(const std::string& path) { return parse_kcf_json(load_json(path)); }

Json report_to_json(const ObservabilityReport& rep) {
    Json j;
    j["darouach"] = rep.darouach;
    j["i_obs_rank"] = rep.i_obs_rank;
    j["i_obs_wong"] = rep.i_obs_wong;
    j["pio_rank"] = rep.pio_rank;
    j["pio_wong"] = rep.pio_wong;
    j["discrepancy_flag"] = rep.discrepancy_flag;
    if (rep.witness) {
        Json w = Json::array();
        for (const Rational& x : *rep.witness) w.push_back(format_rational(x));
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    Json details = Json::array();
    for (const RankDetail& d : rep.rank_details)
        details.push_back({{"l", d.l}, {"rank_F", d.rank_f}, {"rank_FL", d.rank_fl}});
    j["rank_details"] = std::move(details);
    return j;
}

ObservabilityReport report_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("report: expected a JSON object");
    reject_unknown_keys(j,
                        {"darouach", "i_obs_rank", "i_obs_wong", "pio_rank", "pio_wong",
                         "discrepancy_flag", "witness", "rank_details"},
                        "report");
    ObservabilityReport rep;
    rep.darouach = require_field(j, "darouach").get<bool>();
    rep.i_obs_rank = require_field(j, "i_obs_rank").get<bool>();
    rep.i_obs_wong = require_field(j, "i_obs_wong").get<bool>();
    rep.pio_rank = require_field(j, "pio_rank").get<bool>();
    rep.pio_wong = require_field(j, "pio_wong").get<bool>();
    rep.discrepancy_flag = require_field(j, "discrepancy_flag").get<bool>();
    const Json& w = require_field(j, "witness");
    if (!w.is_null()) {
        std::vector<Rational> witness;
        for (const Json& cell : w) witness.push_back(parse_rational(cell.get<std::string>()));
        rep.witness = std::move(witness);
    }
    for (const Json& d : require_field(j, "rank_details"))
        rep.rank_details.push_back({d.at("l").get<std::size_t>(),
                                    d.at("rank_F").get<std::size_t>(),
                                    d.at("rank_FL").get<std::size_t>()});
    return rep;
}

std::string render_report(const DescriptorSystem& sys, const ObservabilityReport& rep) {
    std::ostringstream os;
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "system: m=" << sys.m() << " n=" << sys.n() << " p=" << sys.p() << " r=" << sys.r()
       << "\n";
    os << "published rank test (Darouach):        " << yn(rep.darouach) << "\n";
    os << "impulse observable (rank form):        " << yn(rep.i_obs_rank) << "\n";
    os << "impulse observable (Wong form):        " << yn(rep.i_obs_wong) << "\n";
    os << "partially impulse observable (rank):   " << yn(rep.pio_rank) << "\n";
    os << "partially impulse observable (Wong):   " << yn(rep.pio_wong) << "\n";
    if (rep.discrepancy_flag)
        os << "DISCREPANCY: the published test and the corrected criterion disagree\n";
    if (rep.witness) {
        os << "witness (impulse direction visible in z but silent in y): [";
        for (std::size_t i = 0; i < rep.witness->size(); ++i)
            os << (i ? ", " : "") << format_rational((*rep.witness)[i]);
        os << "]\n";
    }
    os << "rank details:\n";
    for (const RankDetail& d : rep.rank_details)
        os << "  l=" << d.l << "  rank F_l=" << d.rank_f << "  rank F_{l,L}=" << d.rank_fl
           << (d.rank_f == d.rank_fl ? "  (equal)" : "  (differ)") << "\n";
    return os.str();
}

} // namespace pio
