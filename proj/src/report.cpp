#include "cyclic/report.hpp"

#include "cyclic/syntax.hpp"

#include <sstream>

namespace cyclic::report {

Json integer(const Integer& value) {
    if (value >= 0 && value.fits_ulong_p()) {
        return static_cast<std::uint64_t>(value.get_ui());
    }
    if (value.fits_slong_p()) {
        return static_cast<std::int64_t>(value.get_si());
    }
    return to_string(value);
}

namespace {

Json one_based(const std::vector<int>& nodes) {
    Json out = Json::array();
    for (int v : nodes) {
        out.push_back(v + 1);
    }
    return out;
}

}  // namespace

Json descriptor(const CyclicQuiver& q, const ModuliDescriptor& d) {
    return Json{{"quiver", q.to_string()},
                {"eta", integer(d.eta)},
                {"nilcone_dims", d.nilcone_dims},
                {"bundle_rank", d.bundle_rank},
                {"rep_dim", d.rep_dim},
                {"moduli_dim", d.moduli_dim},
                {"coprime", d.coprime},
                {"map_degrees", q.map_degrees()}};
}

Json rep(const CyclicRep& r) {
    Json maps = Json::object();
    for (int i = 0; i < r.size(); ++i) {
        maps["phi" + std::to_string(i + 1)] = format_section(r.map(i));
    }
    return maps;
}

Json fibre(const CyclicQuiver& q, const FibreSet& f) {
    Json points = Json::array();
    for (const auto& p : f.points) {
        points.push_back(Json{{"maps", rep(p.rep())}, {"stable", is_stable(p.rep())}});
    }
    return Json{{"quiver", q.to_string()},
                {"gamma", format_section(f.base_point)},
                {"count", f.points.size()},
                {"points", std::move(points)},
                {"nilcone", f.is_nilcone},
                {"nilcone_dims", f.nilcone_dims}};
}

Json stability(const StabilityReport& s) {
    Json out{{"stable", s.stable}, {"total_slope", to_string(s.total_slope)}};
    if (!s.stable) {
        out["witness"] = one_based(s.witness);
        out["witness_slope"] = to_string(s.witness_slope);
    }
    return out;
}

Json k1_rep(const K1Rep& r) {
    Json maps = Json::object();
    for (int i = 0; i < r.rank(); ++i) {
        maps["phi" + std::to_string(2 * i + 1)] = format_form(r.odd(i));
        maps["phi" + std::to_string(2 * i + 2)] = format_form(r.even(i));
    }
    return maps;
}

Json decomposition(const K1Quiver& q, const DecompositionDescriptor& d) {
    Json factors = Json::array();
    for (const auto& f : d.factors) {
        factors.push_back(Json{{"node_degree", f.first_degree},
                               {"tail_degree", f.second_degree},
                               {"reduction", f.reduction},
                               {"fibre_count", integer(f.fibre_count())},
                               {"nilcone_dim", f.nilcone_dim()},
                               {"moduli_dim", f.moduli_dim()}});
    }
    return Json{{"quiver", q.to_string()},
                {"reduction_amounts", reduction_amounts(q)},
                {"factors", std::move(factors)},
                {"cover_count", integer(d.cover_count)},
                {"special_locus_dim", d.special_locus_dim},
                {"moduli_dim", d.moduli_dim}};
}

Json reduction(const K1Rep& input, const K1Reduction& reduced) {
    Json multipliers = Json::array();
    for (const auto& m : reduced.multipliers) {
        multipliers.push_back(Json{{"target", "phi" + std::to_string(2 * m.target + 1)},
                                   {"source", "phi" + std::to_string(2 * m.source + 1)},
                                   {"psi", format_form(m.psi)}});
    }
    const auto before = k1_characteristic(input);
    const auto after = k1_characteristic(reduced.rep);
    Json exponent = before.subleading_exponent ? Json(*before.subleading_exponent) : Json(nullptr);
    return Json{{"quiver", input.quiver().to_string()},
                {"rep", k1_rep(reduced.rep)},
                {"multipliers", std::move(multipliers)},
                {"chart_shift", reduced.chart_shift},
                {"base_point", reduced.base_point.to_string()},
                {"reduction_amounts", reduction_amounts(input.quiver())},
                {"hitchin_image", format_form(after.gamma)},
                {"hitchin_preserved", before.gamma == after.gamma},
                {"lambda_exponent", exponent}};
}

Json k1_count(const K1FibreCount& c) {
    if (c.special_locus) {
        return Json{{"special_locus", true}, {"special_locus_dim", c.special_locus_dim}};
    }
    return Json{{"special_locus", false}, {"count", integer(c.count)}};
}

namespace {

std::string scalar(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

bool all_scalars(const Json& list) {
    for (const auto& v : list) {
        if (v.is_structured()) {
            return false;
        }
    }
    return true;
}

void render(const Json& doc, const std::string& indent, std::ostringstream& out) {
    for (const auto& [key, value] : doc.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            render(value, indent + "  ", out);
        } else if (value.is_array() && all_scalars(value)) {
            out << indent << key << ": [";
            for (std::size_t i = 0; i < value.size(); ++i) {
                out << (i ? ", " : "") << scalar(value[i]);
            }
            out << "]\n";
        } else if (value.is_array()) {
            out << indent << key << ":\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                out << indent << "  [" << i + 1 << "]\n";
                render(value[i], indent + "    ", out);
            }
        } else {
            out << indent << key << ": " << scalar(value) << "\n";
        }
    }
}

}  // namespace

std::string text(const Json& doc) {
    std::ostringstream out;
    render(doc, "", out);
    return out.str();
}

}  // namespace cyclic::report
