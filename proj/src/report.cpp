#include "polyideal/report.hpp"

#include <sstream>

namespace polyideal {

Json vertex_json(Vertex v) { return Json::array({v.i, v.j}); }

Json cells_json(const std::vector<Cell>& cells) {
    Json out = Json::array();
    for (const auto& c : cells) out.push_back(vertex_json(c.ll));
    return out;
}

Json checks_json(const std::vector<Check>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        if (!c.detail.empty()) j["detail"] = c.detail;
        out.push_back(j);
    }
    return out;
}

Json to_json(const ClassificationRecord& r) {
    Json j;
    j["polyomino"] = r.is_polyomino;
    j["thin"] = r.is_thin;
    j["row_convex"] = r.is_row_convex;
    j["col_convex"] = r.is_col_convex;
    j["convex"] = r.is_convex;
    j["parallelogram"] = r.is_parallelogram;
    j["ladder"] = r.is_ladder;
    Json lm = Json::array();
    for (auto v : r.left_most) lm.push_back(vertex_json(v));
    j["left_most"] = lm;
    j["parallelogram_with_attachments"] = r.parallelogram_with_attachments;
    j["simple"] = r.is_simple;
    j["closed_path"] = r.closed_path ? cells_json(*r.closed_path) : Json(nullptr);
    j["weakly_closed_path"] = r.weakly_closed_path ? cells_json(*r.weakly_closed_path) : Json(nullptr);
    j["thin_conditions"] = r.thin_thm51;
    j["thin_conditions_mirrored"] = r.thin_reflected;
    j["thin_cellwise_intersections"] = r.thin_cellwise_intersections;
    return j;
}

Json to_json(const GroebnerBasis& G) {
    Json j;
    j["order"] = G.order.describe();
    j["reduced"] = G.reduced;
    j["size"] = G.elements.size();
    Json el = Json::array();
    for (auto& g : G.elements) el.push_back(to_string(g, G.order));
    j["elements"] = el;
    return j;
}

Json to_json(const KnutsonReport& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["route"] = to_string(r.route);
    j["f_degree"] = r.f_degree;
    j["f_initial"] = r.route == KnutsonRoute::none ? Json(nullptr) : Json(to_string(r.f_initial));
    Json pf = Json::array();
    for (auto& p : r.proxy_flags) pf.push_back(p);
    j["proxy_flags"] = pf;
    Json sk = Json::array();
    for (auto& s : r.skipped) sk.push_back(s);
    j["skipped"] = sk;
    j["subchecks"] = checks_json(r.subchecks);
    return j;
}

Json to_json(const KonigCertificate& c, const KonigVerification& v) {
    Json j;
    j["strategy"] = c.strategy;
    j["height_claim"] = c.height_claim;
    Json ch = Json::array();
    for (auto& s : c.chosen) {
        Json e;
        e["interval"] = to_string(s.binomial.interval);
        e["binomial"] = to_string(s.binomial.polynomial);
        e["claimed"] = to_string(s.claimed);
        ch.push_back(e);
    }
    j["chosen"] = ch;
    Json w;
    for (auto& [vx, q] : v.weight) w[to_string(vx)] = q.get_str();
    j["weight"] = v.weight.empty() ? Json(nullptr) : w;
    Json ver;
    ver["generators"] = v.generators;
    ver["count"] = v.count;
    ver["coprime"] = v.coprime;
    ver["realizable"] = v.realizable;
    ver["height"] = v.height;
    ver["passed"] = v.passed();
    if (!v.detail.empty()) ver["detail"] = v.detail;
    j["verification"] = ver;
    return j;
}

Json to_json(const PrimeVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["witness"] = v.witness ? Json(to_string(*v.witness)) : Json(nullptr);
    j["note"] = v.note;
    j["characteristic"] = 0;
    return j;
}

Json to_json(const ExtractionReport& r) {
    Json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["P"] = cells_json(r.P.cells());
    j["Q1"] = cells_json(r.Q1.cells());
    j["Q2"] = cells_json(r.Q2.cells());
    j["branch"] = r.simple ? "simple" : "non-simple";
    j["condition"] = r.condition;
    Json viol = Json::array();
    for (auto& iv : r.violating) viol.push_back(to_string(iv));
    j["violating_intervals"] = viol;
    j["sum_equal"] = r.sum_equal ? Json(*r.sum_equal) : Json(nullptr);
    j["groebner_claim"] = r.groebner_claim ? Json(*r.groebner_claim) : Json(nullptr);
    j["subchecks"] = checks_json(r.subchecks);
    return j;
}

Json to_json(const std::vector<ChiSweep>& sweep) {
    Json j;
    long total = 0, fails = 0;
    bool part = true;
    Json rows = Json::array();
    for (auto& s : sweep) {
        Json r;
        r["n"] = s.n;
        r["checks"] = s.checks;
        r["failures"] = s.failures;
        r["partition_ok"] = s.partition_ok;
        rows.push_back(r);
        total += s.checks;
        fails += s.failures;
        part = part && s.partition_ok;
    }
    j["summary"] = fails == 0 ? "all chi(n,l,sigma) hold" : "chi fails on " + std::to_string(fails) + " cases";
    j["checks"] = total;
    j["partition_ok"] = part;
    j["by_n"] = rows;
    return j;
}

namespace {

std::string scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "none";
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + scalar(j[k]);
        return s + "]";
    }
    return j.dump();
}

bool flat(const Json& j) {
    if (j.is_object()) return false;
    if (j.is_array())
        for (auto& e : j)
            if (e.is_object() || (e.is_array() && !flat(e))) return false;
    return true;
}

void emit(std::ostringstream& os, const Json& j, const std::string& pad) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (flat(v) && !(v.is_array() && v.size() > 6 && v.front().is_string())) {
            os << pad << it.key() << ": " << scalar(v) << '\n';
        } else if (v.is_object()) {
            os << pad << it.key() << ":\n";
            emit(os, v, pad + "  ");
        } else {
            os << pad << it.key() << ":\n";
            for (auto& e : v) {
                if (e.is_object()) {
                    bool first = true;
                    for (auto f = e.begin(); f != e.end(); ++f) {
                        os << pad << (first ? "  - " : "    ") << f.key() << ": " << scalar(f.value()) << '\n';
                        first = false;
                    }
                } else {
                    os << pad << "  - " << scalar(e) << '\n';
                }
            }
        }
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    if (j.is_object()) emit(os, j, "");
    else os << scalar(j) << '\n';
    return os.str();
}

}  // namespace polyideal
