#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vkdim/complex.hpp"

namespace vkdim::tools {

enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_undetermined = 2,
    exit_check_failed = 3,
};

struct Flags {
    bool integral = false;
    bool strict = false;
    bool allow_non_flag = false;
    std::size_t max_cells = 1'000'000;
    std::uint64_t seed = 0;
    int search_budget = 2;
};

/// Reads a JSON document from a path, or from stdin for "-". Throws
/// FormatError with the parser's location on malformed input.
nlohmann::json read_json(const std::string& path);

/// Reads and validates a complex; rejects the empty complex.
SimplicialComplex load_complex(const std::string& path);

int cmd_analyze(const std::vector<std::string>& inputs, const Flags& flags, const std::string& certificate_out,
                std::ostream& out, std::ostream& err);
int cmd_generate(const std::string& name, const std::vector<std::string>& params, const Flags& flags,
                 std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& certificate, const std::string& complex, std::ostream& out, std::ostream& err);
int cmd_lemma_suite(std::uint64_t seed, std::size_t count, bool inject_sign_bug, std::ostream& out,
                    std::ostream& err);
int cmd_homology(const std::string& input, std::ostream& out, std::ostream& err);
int cmd_octahedralize(const std::string& input, std::ostream& out, std::ostream& err);

}  // namespace vkdim::tools
