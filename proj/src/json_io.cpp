#include "fragmenta/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fragmenta {

namespace {

std::int64_t to_i64(const BigInt& z, const char* what) {
    if (!z.fits_slong_p()) throw Error(std::string("value too large for the JSON schema: ") + what);
    return z.get_si();
}

nlohmann::json scalar_fields(const ExactScalar& s) {
    return nlohmann::json::array({to_i64(s.re.get_num(), "re_num"), to_i64(s.re.get_den(), "re_den"),
                                  to_i64(s.im.get_num(), "im_num"), to_i64(s.im.get_den(), "im_den")});
}

Rational rational_from(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

}  // namespace

nlohmann::json operator_to_json(const ExactOperator& op) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::int64_t i = 0; i < op.dim; ++i) {
        for (const auto& [j, v] : op.rows[i]) {
            auto f = scalar_fields(v);
            entries.push_back({i, j, f[0], f[1], f[2], f[3]});
        }
    }
    return {{"dim", op.dim}, {"entries", entries}};
}

ExactOperator operator_from_json(const nlohmann::json& j) {
    ExactOperator op(j.at("dim").get<std::int64_t>());
    for (const auto& e : j.at("entries")) {
        if (e.size() != 6) throw Error("operator entry needs 6 fields");
        op.add(e[0].get<std::int64_t>(), e[1].get<std::int64_t>(),
               ExactScalar(rational_from(e[2], e[3]), rational_from(e[4], e[5])));
    }
    return op;
}

nlohmann::json vector_to_json(const ExactVector& v) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [i, s] : v.entries) {
        auto f = scalar_fields(s);
        entries.push_back({i, f[0], f[1], f[2], f[3]});
    }
    return {{"dim", v.dim}, {"entries", entries}};
}

ExactVector vector_from_json(const nlohmann::json& j) {
    ExactVector v(j.at("dim").get<std::int64_t>());
    for (const auto& e : j.at("entries")) {
        if (e.size() != 5) throw Error("vector entry needs 5 fields");
        v.set(e[0].get<std::int64_t>(),
              ExactScalar(rational_from(e[1], e[2]), rational_from(e[3], e[4])));
    }
    return v;
}

ModelId model_from_json(const nlohmann::json& j) {
    ModelId id;
    id.kind = model_kind_from_string(j.at("model").get<std::string>());
    id.N = j.value("N", 2);
    id.L = j.at("L").get<int>();
    std::string boundary = j.value("boundary", "open");
    if (boundary == "open")
        id.boundary = Boundary::open;
    else if (boundary == "periodic")
        id.boundary = Boundary::periodic;
    else
        throw Error("boundary must be open or periodic");
    auto read_rationals = [](const nlohmann::json& arr) {
        std::vector<Rational> out;
        for (const auto& x : arr) {
            if (x.is_number_integer())
                out.push_back(Rational(x.get<long>()));
            else if (x.is_array() && x.size() == 2)
                out.push_back(rational_from(x[0], x[1]));
            else
                throw Error("couplings must be integers or [num, den] pairs");
        }
        return out;
    };
    if (j.contains("J")) id.J = read_rationals(j["J"]);
    if (j.contains("h")) id.h = read_rationals(j["h"]);
    if (j.contains("g")) {
        for (const auto& row : j["g"]) id.g.push_back(read_rationals(row));
    }
    id.validate();
    return id;
}

nlohmann::json model_to_json(const ModelId& id) {
    nlohmann::json j;
    j["model"] = model_kind_name(id.kind);
    j["N"] = id.N;
    j["L"] = id.L;
    j["boundary"] = id.boundary == Boundary::open ? "open" : "periodic";
    auto rationals = [](const std::vector<Rational>& xs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : xs) {
            if (x.get_den() == 1)
                arr.push_back(to_i64(x.get_num(), "coupling"));
            else
                arr.push_back({to_i64(x.get_num(), "coupling"), to_i64(x.get_den(), "coupling")});
        }
        return arr;
    };
    if (!id.J.empty()) j["J"] = rationals(id.J);
    if (!id.h.empty()) j["h"] = rationals(id.h);
    return j;
}

nlohmann::json sector_label_to_json(const SectorLabel& label) {
    nlohmann::json segments = nlohmann::json::array();
    for (const auto& seg : label.segments) {
        nlohmann::json s;
        s["s"] = seg.label.str();
        s["colors"] = seg.colors;
        s["l"] = seg.length;
        segments.push_back(std::move(s));
    }
    return {{"segments", segments}, {"dimers", label.dimer_count}};
}

SectorLabel sector_label_from_json(const nlohmann::json& j) {
    SectorLabel label;
    label.dimer_count = j.value("dimers", 0);
    for (const auto& s : j.at("segments")) {
        FrozenSegment seg;
        for (char c : s.at("s").get<std::string>()) seg.label.colors.push_back(c - '0');
        seg.colors = s.at("colors").get<std::vector<int>>();
        seg.length = s.at("l").get<int>();
        seg.validate();
        label.segments.push_back(std::move(seg));
    }
    return label;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace fragmenta
