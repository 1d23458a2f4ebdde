#include "k3seq/json_io.hpp"

#include <stdexcept>

namespace k3seq::io {

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(long(j.get<std::int64_t>()));
    if (j.is_string()) return Rat::from_string(j.get<std::string>());
    throw std::invalid_argument("expected rational as string or integer");
}

namespace {
Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(long(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer entry");
}
}  // namespace

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json imat_to_json(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IMat imat_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    int rows = int(j.size());
    int cols = rows ? int(j.at(0).size()) : 0;
    IMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (int(j.at(i).size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(i, c) = int_from_json(j.at(i).at(c));
    }
    return m;
}

json qmat_to_json(const QMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json lattice_to_json(const lattices::Lattice& l) {
    json j;
    if (!l.label.empty()) j["label"] = l.label;
    j["gram"] = imat_to_json(l.gram);
    return j;
}

lattices::Lattice lattice_from_json(const json& j) {
    if (!j.contains("gram")) throw std::invalid_argument("lattice JSON needs 'gram'");
    std::string label = j.value("label", std::string{});
    return lattices::Lattice(imat_from_json(j.at("gram")), label);
}

json params_to_json(const fibers::FamilyParams& p) {
    json arr = json::array();
    for (const auto& c : p.a) arr.push_back(c.str());
    return json{{"a", arr}};
}

fibers::FamilyParams params_from_json(const json& j) {
    const json& arr = j.is_array() ? j : j.at("a");
    if (!arr.is_array() || arr.size() != 7)
        throw std::invalid_argument(
            "parameters must be 7 rationals in the order a0,a2,a4,a6,a8,a10,a14");
    fibers::FamilyParams p;
    for (size_t i = 0; i < 7; ++i) p.a[i] = rat_from_json(arr.at(i));
    return p;
}

json fiber_configuration_to_json(const fibers::FiberConfiguration& cfg) {
    json fibers_json = json::array();
    for (const auto& f : cfg.fibers) {
        json ords;
        auto ord = [](int v) { return v < 0 ? json(nullptr) : json(v); };
        ords["g2"] = ord(f.ord_g2);
        ords["g3"] = ord(f.ord_g3);
        ords["delta"] = ord(f.ord_delta);
        fibers_json.push_back(json{{"place", f.place},
                                   {"ords", ords},
                                   {"type", f.type.label()},
                                   {"count", f.count},
                                   {"euler", f.euler()}});
    }
    return json{{"fibers", fibers_json},
                {"euler_total", cfg.total_euler()},
                {"summary", cfg.summary()}};
}

json report_to_json(const checks::Report& rep) {
    json checks_json = json::array();
    for (const auto& e : rep.entries)
        checks_json.push_back(json{{"id", e.id},
                                   {"anchor", e.anchor},
                                   {"status", e.status},
                                   {"detail", e.detail},
                                   {"elapsed_ms", e.elapsed_ms}});
    return json{{"seed", rep.seed},
                {"checks", checks_json},
                {"summary", json{{"pass", rep.passed},
                                 {"fail", rep.failed},
                                 {"skipped", rep.skipped}}}};
}

json with_schema(json payload) {
    payload["schema"] = 1;
    return payload;
}

}  // namespace k3seq::io
