#include "ellred/batch.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <thread>
#include <vector>

#include "ellred/expr.hpp"

namespace ellred {

BaseFieldPtr field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw DomainError("base_field must be an object with a \"kind\" string");
    const std::string kind = j.at("kind").get<std::string>();
    auto get_p = [&j]() {
        if (!j.contains("p")) throw DomainError("base_field kind requires a prime \"p\"");
        const auto& p = j.at("p");
        if (p.is_number_integer()) return Int(p.get<long long>());
        if (p.is_string()) return Int(p.get<std::string>());
        throw DomainError("\"p\" must be an integer");
    };
    if (kind == "p-adic") return BaseField::p_adic(get_p());
    if (kind == "t-adic") {
        Semantics sem = Semantics::Exact;
        if (j.contains("semantics")) {
            const std::string s = j.at("semantics").get<std::string>();
            if (s == "real-signs") sem = Semantics::RealSigns;
            else if (s != "exact") throw DomainError("semantics must be \"exact\" or \"real-signs\"");
        }
        return BaseField::t_adic_over_q(sem);
    }
    if (kind == "t-adic-fp") return BaseField::t_adic_over_fp(get_p());
    if (kind == "composite-t-p") return BaseField::composite_t_p(get_p());
    throw DomainError("unknown base field kind \"" + kind + "\"");
}

Json field_to_json(const BaseFieldPtr& field) {
    Json j;
    switch (field->kind()) {
    case FieldKind::PAdicQ:
        j["kind"] = "p-adic";
        j["p"] = field->p().str();
        break;
    case FieldKind::TAdicQ:
        j["kind"] = "t-adic";
        j["semantics"] = field->semantics() == Semantics::RealSigns ? "real-signs" : "exact";
        break;
    case FieldKind::TAdicFp:
        j["kind"] = "t-adic-fp";
        j["p"] = field->p().str();
        break;
    case FieldKind::CompositeTP:
        j["kind"] = "composite-t-p";
        j["p"] = field->p().str();
        break;
    }
    return j;
}

Json value_to_json(const Value& v) {
    if (v.is_infinity()) return Json("inf");
    Json arr = Json::array();
    for (const auto& c : v.comps()) arr.push_back(c.str());
    return arr;
}

Json conic_to_json(const ConicClass& c, bool has_point) {
    Json j;
    j["class"] = Json::array({c.a.str(), c.b.str()});
    j["has_point"] = has_point;
    return j;
}

Json report_to_json(const std::string& id, const WeierstrassCurve& curve,
                    const OmegaStarReport& report) {
    Json j;
    j["id"] = id;
    j["discriminant"] = curve.disc().str();
    j["v_delta"] = value_to_json(report.reduction.v_disc);
    j["v_a3"] = value_to_json(report.reduction.v_a3);
    j["v_b2"] = value_to_json(report.reduction.v_b2);
    j["reduction"] = reduction_name(report.reduction.kind);
    j["omega_star"] = report.count;
    if (report.witness) {
        Json w;
        w["generator"] = Json{{"e", report.witness->generator.e.str()},
                              {"f", report.witness->generator.f.str()}};
        w["d"] = report.witness->scaling.d.str();
        if (report.witness->scaling.c) w["c"] = report.witness->scaling.c->str();
        if (report.witness->scaling.u1) w["u1"] = report.witness->scaling.u1->str();
        if (report.witness->scaling.u2) w["u2"] = report.witness->scaling.u2->str();
        j["witness"] = w;
    }
    if (report.elliptic_residue) {
        j["residue"] = Json{{"kind", "elliptic"},
                            {"a_bar", report.elliptic_residue->a_bar.str()},
                            {"b_bar", report.elliptic_residue->b_bar.str()},
                            {"delta_bar", report.elliptic_residue->disc_bar.str()}};
    } else if (report.conic_residue) {
        j["residue"] = Json{{"kind", "conic"},
                            {"class", Json::array({report.conic_residue->conic.a.str(),
                                                   report.conic_residue->conic.b.str()})}};
    }
    j["notes"] = report.notes;
    return j;
}

Json analysis_to_json(const ResidueAnalysis& analysis) {
    Json j;
    j["w_g"] = value_to_json(analysis.w_g);
    j["in_2vE"] = analysis.parity_in_2vE;
    j["kind"] = shape_name(analysis.kind);
    j["ruled"] = analysis.ruled;
    if (analysis.core) {
        j["core"] = Json{{"constant", analysis.core->constant_class.str()},
                         {"poly", analysis.core->core_poly.str()}};
    }
    if (analysis.conic_ab) {
        j["conic"] = Json{{"A", analysis.conic_ab->first.str()},
                          {"B", analysis.conic_ab->second.str()},
                          {"normalized", Json::array({analysis.conic_class->a.str(),
                                                      analysis.conic_class->b.str()})}};
    }
    if (analysis.kind == ResidueFieldShape::GenusAtLeastOne) j["genus"] = analysis.genus;
    if (analysis.kind == ResidueFieldShape::SplitOrConstant) j["split"] = analysis.split;
    return j;
}

namespace {

std::string process_line(const std::string& line, std::size_t line_no, bool pretty, bool& ok) {
    ok = false;
    Json out;
    std::string id;
    try {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            throw DomainError("empty record");
        Json rec = Json::parse(line);
        if (rec.contains("id") && rec.at("id").is_string()) id = rec.at("id").get<std::string>();
        if (!rec.contains("base_field")) throw DomainError("missing \"base_field\"");
        if (!rec.contains("a") || !rec.contains("b")) throw DomainError("missing \"a\" or \"b\"");
        BaseFieldPtr field = field_from_json(rec.at("base_field"));
        BaseElement a = parse_element(rec.at("a").get<std::string>(), field);
        BaseElement b = parse_element(rec.at("b").get<std::string>(), field);
        BaseElement disc = discriminant(a, b);
        if (disc.is_zero()) throw DomainError("singular curve: 4a^3 + 27b^2 = 0");
        WeierstrassCurve curve(std::move(a), std::move(b));
        out = report_to_json(id, curve, omega_star(curve));
        ok = true;
    } catch (const std::exception& e) {
        out = Json{{"line", line_no}, {"error", e.what()}};
        if (!id.empty()) out["id"] = id;
    }
    return pretty ? out.dump(2) : out.dump();
}

} // namespace

BatchResult run_classify(std::istream& in, std::ostream& out, const ClassifyOptions& opts) {
    BatchResult result;
    std::string line;
    // one output object per input line, blank lines included, so the
    // output line count always matches the input line count
    if (opts.jobs <= 1) {
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            bool ok = false;
            out << process_line(line, line_no, opts.pretty, ok) << "\n";
            ++result.records;
            if (!ok) ++result.errors;
        }
        return result;
    }
    // parallel batch: records are independent; buffer and emit in input order
    std::vector<std::pair<std::size_t, std::string>> inputs;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        inputs.emplace_back(line_no, line);
    }
    std::vector<std::string> outputs(inputs.size());
    std::vector<char> oks(inputs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= inputs.size()) return;
            bool ok = false;
            outputs[i] = process_line(inputs[i].second, inputs[i].first, opts.pretty, ok);
            oks[i] = ok ? 1 : 0;
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(opts.jobs, static_cast<int>(inputs.size()));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        out << outputs[i] << "\n";
        ++result.records;
        if (!oks[i]) ++result.errors;
    }
    return result;
}

} // namespace ellred
