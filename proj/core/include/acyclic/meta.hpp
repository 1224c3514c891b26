#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "acyclic/colouring.hpp"
#include "acyclic/gadgets.hpp"
#include "acyclic/reductions.hpp"

namespace acyclic {

inline constexpr const char* kToolVersion = "acyclic-lab 0.1.0";

/// Reproducibility record written next to every generated artifact:
/// identical command and inputs give byte-identical outcome summaries
/// (timings are deliberately excluded).
struct Manifest {
    std::string command;
    std::map<std::string, std::string> input_hashes;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json outcome = nlohmann::json::object();
    std::string version = kToolVersion;
};

nlohmann::json to_json(const Manifest& m);

/// FNV-1a 64-bit, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);
std::string hash_file(const std::string& path);

nlohmann::json colouring_json(const Colouring& f);
nlohmann::json gadget_meta(const GadgetGraph& gadget);
nlohmann::json reduction_meta(const ReductionOutput& out, const std::string& source_hash);

std::string role_name(Role role);

}  // namespace acyclic
