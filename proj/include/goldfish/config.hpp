#pragma once

#include <string>
#include <string_view>

#include "goldfish/types.hpp"

namespace goldfish {

/// Decodes a JSON configuration document:
///   {"n": int, "omega": float, "z0": [[re,im],...], "v0": [[re,im],...],
///    "t_end": float (optional, default 2*pi/omega), "samples": int (optional, default 1000)}
/// Throws ParseError for malformed JSON and ValidationError (with the field path) for
/// documents that decode but violate the configuration invariants.
SystemConfig load_config(std::string_view document);
SystemConfig load_config_file(const std::string& path);

/// Canonical JSON form; load_config(serialize_config(c)) reproduces c exactly.
std::string serialize_config(const SystemConfig& config);

/// Checks n >= 2, omega > 0, lengths, finiteness and pairwise-distinct positions.
void validate(const SystemConfig& config);

/// 2*pi/omega.
double period(const SystemConfig& config);
double period(double omega);

/// samples + 1 equally spaced times covering [0, t_end].
std::vector<double> uniform_times(double t_end, int samples);

}  // namespace goldfish
