#include "acyclic/meta.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace acyclic {

nlohmann::json to_json(const Manifest& m) {
    return nlohmann::json{{"command", m.command},
                          {"inputs", m.input_hashes},
                          {"parameters", m.parameters},
                          {"outcome", m.outcome},
                          {"version", m.version}};
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a_hex(ss.str());
}

nlohmann::json colouring_json(const Colouring& f) {
    return nlohmann::json{{"k", f.palette_size}, {"assignment", f.assignment}};
}

std::string role_name(Role role) {
    switch (role) {
        case Role::plain: return "plain";
        case Role::terminal: return "terminal";
        case Role::connector: return "connector";
        case Role::chain_level: return "chain-level";
        case Role::copy_one: return "copy-1";
        case Role::copy_two: return "copy-2";
        case Role::filler_internal: return "filler-internal";
    }
    return "?";
}

nlohmann::json gadget_meta(const GadgetGraph& gadget) {
    nlohmann::json tags = nlohmann::json::array();
    for (int v = 0; v < gadget.graph.vertex_count(); ++v) {
        const VertexTag& tag = gadget.tags[v];
        nlohmann::json t{{"v", v}, {"label", tag.label}, {"role", role_name(tag.role)}};
        if (tag.role == Role::chain_level) t["level"] = tag.param;
        tags.push_back(std::move(t));
    }
    nlohmann::json meta{{"kind", "gadget"},
                        {"n", gadget.graph.vertex_count()},
                        {"m", gadget.graph.edge_count()},
                        {"terminals", gadget.terminals},
                        {"tags", std::move(tags)}};
    meta["canonical_colouring"] =
        gadget.canonical_colouring ? colouring_json(*gadget.canonical_colouring)
                                   : nlohmann::json(nullptr);
    return meta;
}

nlohmann::json reduction_meta(const ReductionOutput& out, const std::string& source_hash) {
    nlohmann::json prov = nlohmann::json::array();
    for (int v = 0; v < out.graph.vertex_count(); ++v)
        prov.push_back(nlohmann::json{{"v", v}, {"origin", out.provenance[v].to_string()}});
    nlohmann::json claims = nlohmann::json::array();
    for (const Claim& c : out.claimed_properties) claims.push_back(c.to_string());
    return nlohmann::json{{"kind", "reduction"},
                          {"n", out.graph.vertex_count()},
                          {"m", out.graph.edge_count()},
                          {"provenance", std::move(prov)},
                          {"claimed_properties", std::move(claims)},
                          {"source_hash", source_hash}};
}

}  // namespace acyclic
