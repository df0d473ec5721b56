#include "geomcolor/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace geomcolor {
namespace {

using nlohmann::json;

json rat_to_json(const Rat& r) {
    if (rat_den(r) == 1) {
        Int num = rat_num(r);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max()) {
            return static_cast<std::int64_t>(num);
        }
    }
    return format_rational(r);
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field: ") + name);
    return *it;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    json j;
    j["family"] = family_name(inst.family);
    switch (inst.family) {
        case Family::b_points:
        case Family::h_points:
        case Family::bprime_points: {
            json pts = json::array();
            for (const auto& p : inst.points) {
                pts.push_back(json::array({rat_to_json(p.x), rat_to_json(p.y)}));
            }
            j["points"] = std::move(pts);
            break;
        }
        case Family::b_rects: {
            json rs = json::array();
            for (const auto& r : inst.rects) {
                rs.push_back({{"a", rat_to_json(r.a)},
                              {"b", rat_to_json(r.b)},
                              {"c", rat_to_json(r.c)}});
            }
            j["rects"] = std::move(rs);
            break;
        }
        case Family::h_rects: {
            json hs = json::array();
            for (const auto& h : inst.halfplanes) {
                hs.push_back({{"slope", rat_to_json(h.slope)},
                              {"intercept", rat_to_json(h.intercept)},
                              {"region",
                               h.region == HalfPlaneRegion::above ? "above" : "below"}});
            }
            j["halfplanes"] = std::move(hs);
            break;
        }
        case Family::bprime_rects: {
            json rs = json::array();
            for (const auto& r : inst.baseline_rects) {
                rs.push_back({{"a", rat_to_json(r.a)},
                              {"b", rat_to_json(r.b)},
                              {"bottom", rat_to_json(r.bottom)},
                              {"top", rat_to_json(r.top)}});
            }
            j["baseline_rects"] = std::move(rs);
            break;
        }
    }
    return j.dump(2) + "\n";
}

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance must be a JSON object");

    Instance inst;
    try {
        inst.family = family_from_name(field(j, "family").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw UnknownFamilyError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad family field: ") + e.what());
    }

    try {
        switch (inst.family) {
            case Family::b_points:
            case Family::h_points:
            case Family::bprime_points:
                for (const auto& p : field(j, "points")) {
                    if (!p.is_array() || p.size() != 2) {
                        throw ParseError("each point must be an [x, y] pair");
                    }
                    inst.points.push_back({rat_from_json(p[0]), rat_from_json(p[1])});
                }
                break;
            case Family::b_rects:
                for (const auto& r : field(j, "rects")) {
                    inst.rects.push_back({rat_from_json(field(r, "a")),
                                          rat_from_json(field(r, "b")),
                                          rat_from_json(field(r, "c"))});
                }
                break;
            case Family::h_rects:
                for (const auto& h : field(j, "halfplanes")) {
                    std::string region = field(h, "region").get<std::string>();
                    if (region != "above" && region != "below") {
                        throw ParseError("region must be \"above\" or \"below\"");
                    }
                    inst.halfplanes.push_back({rat_from_json(field(h, "slope")),
                                               rat_from_json(field(h, "intercept")),
                                               region == "above" ? HalfPlaneRegion::above
                                                                 : HalfPlaneRegion::below});
                }
                break;
            case Family::bprime_rects:
                for (const auto& r : field(j, "baseline_rects")) {
                    inst.baseline_rects.push_back({rat_from_json(field(r, "a")),
                                                   rat_from_json(field(r, "b")),
                                                   rat_from_json(field(r, "bottom")),
                                                   rat_from_json(field(r, "top"))});
                }
                break;
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad instance payload: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return inst;
}

std::string serialize_coloring(const Coloring& col) {
    json j;
    j["palette"] = col.palette_size;
    j["colors"] = col.colors;
    return j.dump(2) + "\n";
}

Coloring parse_coloring(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("coloring must be a JSON object");
    Coloring col;
    try {
        col.palette_size = field(j, "palette").get<int>();
        col.colors = field(j, "colors").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad coloring payload: ") + e.what());
    }
    if (col.palette_size < 1) throw ParseError("palette must be positive");
    for (int c : col.colors) {
        if (c < 0 || c >= col.palette_size) {
            throw ParseError("color " + std::to_string(c) + " outside palette");
        }
    }
    return col;
}

std::string serialize_verdict(const Verdict& verdict) {
    json j;
    j["valid"] = verdict.valid;
    if (!verdict.valid) {
        j["reason"] = verdict.reason;
        if (verdict.witness) j["witness"] = *verdict.witness;
    }
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace geomcolor
