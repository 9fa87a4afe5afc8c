#include "gfw/io.hpp"

#include <cstdio>

namespace gfw {

namespace {

OrderingStrategy strategy_from_name(const std::string& name) {
    if (name == "primitive") return OrderingStrategy::PrimitivePower;
    if (name == "radix") return OrderingStrategy::Radix;
    if (name == "trace") return OrderingStrategy::TraceMajor;
    fail(Errc::ConfigParse, "unknown ordering strategy '" + name + "'");
}

Basis basis_from_json(const FieldSpec& spec, const json& arr) {
    std::vector<FieldElement> els;
    for (const auto& s : arr) els.push_back(spec.parse_element(s.get<std::string>()));
    return make_basis(spec, els);
}

json basis_to_json(const FieldSpec& spec, const Basis& b) {
    json arr = json::array();
    for (auto e : b.elements) arr.push_back(spec.to_string(e));
    return arr;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json ordering_to_json(const FieldSpec& spec, const Ordering& ord) {
    json j;
    j["strategy"] = strategy_name(ord.strategy);
    json labels = json::array();
    for (int i = 0; i < ord.dim(); ++i)
        labels.push_back(spec.to_string(spec.element(ord.element_at[i])));
    j["labels"] = labels;
    return j;
}

Ordering ordering_from_json(const FieldSpec& spec, const json& j) {
    OrderingStrategy s = strategy_from_name(j.value("strategy", "primitive"));
    if (j.contains("basis")) {
        Basis b = basis_from_json(spec, j.at("basis"));
        return make_ordering(spec, s, &b);
    }
    if (s == OrderingStrategy::Radix) {
        Basis b = polynomial_basis(spec);
        return make_ordering(spec, s, &b);
    }
    return make_ordering(spec, s);
}

FieldConfig field_config_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("n")) fail(Errc::ConfigParse, "field needs p and n");
    std::optional<std::vector<int>> poly;
    if (j.contains("poly")) poly = j.at("poly").get<std::vector<int>>();
    Field f = make_field(j.at("p").get<int>(), j.at("n").get<int>(), poly);
    Ordering ord = j.contains("ordering")
                       ? ordering_from_json(*f, j.at("ordering"))
                       : make_ordering(*f, OrderingStrategy::PrimitivePower);
    return {f, ord};
}

json field_config_to_json(const FieldSpec& spec, const Ordering& ord) {
    json j;
    j["p"] = spec.p;
    j["n"] = spec.n;
    j["poly"] = spec.poly;
    j["ordering"] = ordering_to_json(spec, ord);
    return j;
}

json phase_to_json(const UnitPhase& u) { return json{{"num", u.num}, {"den", u.den}}; }

json matrix_to_json(const OperatorMatrix& m, const FieldSpec& spec) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            rrow.push_back(m.mat(i, j).real());
            irow.push_back(m.mat(i, j).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return json{{"dim", m.dim()},
                {"ordering", ordering_to_json(spec, m.ord)},
                {"re", re},
                {"im", im}};
}

std::string matrix_to_csv(const OperatorMatrix& m) {
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out += ",";
            out += format_double(m.mat(i, j).real()) + "," + format_double(m.mat(i, j).imag());
        }
        out += "\n";
    }
    return out;
}

json state_to_json(const StateVector& s, const FieldSpec& spec) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < s.dim(); ++i) {
        re.push_back(s.amps(i).real());
        im.push_back(s.amps(i).imag());
    }
    return json{{"dim", s.dim()},
                {"ordering", ordering_to_json(spec, s.ord)},
                {"re", re},
                {"im", im}};
}

StateVector state_from_json(const FieldSpec& spec, const Ordering& ord, const json& j) {
    if (!j.contains("re")) fail(Errc::StateParse, "state needs amplitudes");
    auto re = j.at("re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
    if (static_cast<int>(re.size()) != spec.d || im.size() != re.size())
        fail(Errc::StateParse, "amplitude count does not match the field");
    Eigen::VectorXcd v(spec.d);
    for (int i = 0; i < spec.d; ++i) v(i) = Cx(re[i], im[i]);
    return {v, ord};
}

json rotation_to_json(const RotationSet& rot) {
    const FieldSpec& spec = *rot.field;
    json j;
    j["kind"] = rot.canonical() ? "canonical" : "shifted";
    if (rot.basis) j["basis"] = basis_to_json(spec, *rot.basis);
    if (!rot.canonical()) {
        json h = json::array();
        for (int id = 0; id < spec.d; ++id)
            h.push_back(spec.to_string(spec.element(rot.shift[id])));
        j["h"] = h;
        if (spec.p == 2) {
            json signs = json::object();
            auto bits = shift_to_signs(rot);
            for (int mu = 0; mu < spec.d; ++mu)
                signs[spec.to_string(spec.element(mu))] = bits[mu];
            j["signs"] = signs;
        }
    }
    return j;
}

RotationSet rotation_from_json(const FieldSpec& spec, const json& j) {
    std::string kind = j.value("kind", "canonical");
    if (kind != "canonical" && kind != "shifted")
        fail(Errc::ConfigParse, "rotation kind must be canonical or shifted");

    RotationSet base = [&] {
        if (spec.p != 2) return canonical_rotation_set_odd(spec);
        Basis b = j.contains("basis") ? basis_from_json(spec, j.at("basis"))
                                      : polynomial_basis(spec);
        return canonical_rotation_set_even(spec, b);
    }();
    if (kind == "canonical") return base;

    std::vector<int> h(spec.d, 0);
    if (j.contains("h")) {
        const auto& arr = j.at("h");
        if (static_cast<int>(arr.size()) != spec.d)
            fail(Errc::ConfigParse, "h table needs one entry per element");
        for (int id = 0; id < spec.d; ++id)
            h[id] = spec.parse_element(arr[id].get<std::string>()).id;
    } else if (j.contains("signs")) {
        if (spec.p != 2) fail(Errc::ConfigParse, "sign tables are a p = 2 encoding");
        std::vector<std::vector<int>> bits(spec.d, std::vector<int>(spec.n, 0));
        for (const auto& [key, val] : j.at("signs").items())
            bits[spec.parse_element(key).id] = val.get<std::vector<int>>();
        h = signs_to_shift(spec, *base.basis, bits);
    } else {
        fail(Errc::ConfigParse, "shifted rotation set needs h or signs");
    }
    return shifted_rotation_set(base, h);
}

json grid_to_json(const WignerGrid& w, const FieldSpec& spec) {
    json rows = json::array();  // one row per beta, columns run over alpha
    const int d = w.ord.dim();
    for (int ib = 0; ib < d; ++ib) {
        json row = json::array();
        for (int ia = 0; ia < d; ++ia) row.push_back(w.values(ia, ib));
        rows.push_back(row);
    }
    return json{{"dim", d},
                {"ordering", ordering_to_json(spec, w.ord)},
                {"provenance", w.provenance},
                {"values", rows}};
}

std::string grid_to_csv(const WignerGrid& w, const FieldSpec& spec) {
    const int d = w.ord.dim();
    std::string out = "beta\\alpha";
    for (int ia = 0; ia < d; ++ia)
        out += "," + spec.to_string(spec.element(w.ord.element_at[ia]));
    out += "\n";
    for (int ib = 0; ib < d; ++ib) {
        out += spec.to_string(spec.element(w.ord.element_at[ib]));
        for (int ia = 0; ia < d; ++ia) out += "," + format_double(w.values(ia, ib));
        out += "\n";
    }
    return out;
}

json tensor_state_to_json(const TensorState& t) {
    const FieldSpec& spec = *t.basis.field;
    json re = json::array(), im = json::array();
    for (int i = 0; i < t.dim(); ++i) {
        re.push_back(t.amps(i).real());
        im.push_back(t.amps(i).imag());
    }
    return json{{"dim", t.dim()}, {"p", t.p},          {"n", t.n},
                {"basis", basis_to_json(spec, t.basis)}, {"re", re},
                {"im", im}};
}

TensorState tensor_state_from_json(const FieldSpec& spec, const json& j) {
    if (!j.contains("basis") || !j.contains("re")) fail(Errc::StateParse, "tensor state needs basis and amplitudes");
    if (j.value("p", spec.p) != spec.p || j.value("n", spec.n) != spec.n)
        fail(Errc::BasisMismatch, "tensor state belongs to a different field");
    Basis b = basis_from_json(spec, j.at("basis"));
    auto re = j.at("re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
    if (static_cast<int>(re.size()) != spec.d || im.size() != re.size())
        fail(Errc::StateParse, "amplitude count does not match the field");
    TensorState t{spec.p, spec.n, b, Eigen::VectorXcd(spec.d)};
    for (int i = 0; i < spec.d; ++i) t.amps(i) = Cx(re[i], im[i]);
    return t;
}

json tomogram_to_json(const Tomogram& t) {
    const FieldSpec& spec = *t.field;
    json sloped = json::object();
    for (int mu = 0; mu < spec.d; ++mu) {
        json row = json::object();
        for (int nu = 0; nu < spec.d; ++nu)
            row[spec.to_string(spec.element(nu))] = t.sloped(mu, nu);
        sloped[spec.to_string(spec.element(mu))] = row;
    }
    json vertical = json::object();
    for (int k = 0; k < spec.d; ++k)
        vertical[spec.to_string(spec.element(k))] = t.vertical(k);
    json j{{"sloped", sloped}, {"vertical", vertical}};
    j["shots"] = t.shots ? json(*t.shots) : json(nullptr);
    j["seed"] = t.seed ? json(*t.seed) : json(nullptr);
    return j;
}

Tomogram tomogram_from_json(const FieldSpec& spec, const json& j) {
    Tomogram t;
    t.field = &spec;
    t.sloped.resize(spec.d, spec.d);
    t.vertical.resize(spec.d);
    if (!j.contains("sloped") || !j.contains("vertical"))
        fail(Errc::IncompleteTomogram, "need sloped and vertical tables");
    for (int mu = 0; mu < spec.d; ++mu) {
        std::string mk = spec.to_string(spec.element(mu));
        if (!j.at("sloped").contains(mk))
            fail(Errc::IncompleteTomogram, "missing sloped basis " + mk);
        for (int nu = 0; nu < spec.d; ++nu) {
            std::string nk = spec.to_string(spec.element(nu));
            if (!j.at("sloped").at(mk).contains(nk))
                fail(Errc::IncompleteTomogram, "missing entry (" + mk + ", " + nk + ")");
            t.sloped(mu, nu) = j.at("sloped").at(mk).at(nk).get<double>();
        }
    }
    for (int k = 0; k < spec.d; ++k) {
        std::string kk = spec.to_string(spec.element(k));
        if (!j.at("vertical").contains(kk))
            fail(Errc::IncompleteTomogram, "missing vertical entry " + kk);
        t.vertical(k) = j.at("vertical").at(kk).get<double>();
    }
    if (j.contains("shots") && !j.at("shots").is_null())
        t.shots = j.at("shots").get<long long>();
    if (j.contains("seed") && !j.at("seed").is_null())
        t.seed = j.at("seed").get<std::uint64_t>();
    return t;
}

json distinct_report_to_json(const DistinctWignerReport& rep, const FieldSpec& spec) {
    json reps = json::array();
    for (const auto& h : rep.representatives) {
        json table = json::array();
        for (int id : h) table.push_back(spec.to_string(spec.element(id)));
        reps.push_back(table);
    }
    json j{{"total_structures", rep.total},
           {"distinct", rep.distinct},
           {"representatives", reps},
           {"class_sizes", rep.class_sizes}};
    j["condition_count"] = rep.condition_count ? json(*rep.condition_count) : json(nullptr);
    return j;
}

}  // namespace gfw
