#pragma once

#include "invcompact/experiment.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace invcompact::cli {

/// Raw key=value pairs in the order they should be applied.  Later entries
/// override earlier ones.
using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Parses `key = value` lines; blank lines and text after '#' are ignored.
/// Throws Error{ConfigInvalid} naming the line on malformed input.
ConfigEntries parse_config_text(std::string_view text);
ConfigEntries read_config_file(const std::string& path);

/// Splits a `key=value` command-line override.
std::pair<std::string, std::string> parse_override(std::string_view arg);

/// Fully resolved settings for one invocation.  Problem defaults come from
/// `default_spec(pde, scheme)`; every explicitly given key overrides them.
struct RunConfig {
    ExperimentSpec spec;
    std::vector<Scheme> schemes;       ///< converge / galilean; empty means all valid
    std::vector<std::size_t> sizes;    ///< converge
    std::vector<double> c_values;      ///< galilean
    std::string output_path;           ///< empty means standard output / default name
};

/// Recognised keys, for diagnostics and documentation.
const std::vector<std::string>& config_keys();

/// Builds a RunConfig.  Throws Error{ConfigInvalid} whose message names the
/// offending field for unknown keys, unparsable values, non-finite numbers,
/// n < 5, or a scheme that does not apply to the pde.
RunConfig resolve_config(const ConfigEntries& entries);

/// Schemes to run: the explicit list, or every scheme valid for the pde.
std::vector<Scheme> effective_schemes(const RunConfig& config);

} // namespace invcompact::cli
