#pragma once

#include <stdexcept>
#include <string>

namespace polyforge {

// Every failure the library reports deliberately.  Callers that care about
// the specific condition switch on code(); the message is for humans.
enum class errc {
    empty_input,
    duplicate_cell,
    disconnected,
    not_convex,
    not_directed_convex,
    not_parallelogram,
    not_flat,
    degree_zero,
    cell_outside,
    not_comparable,
    invalid_cut,
    invalid_triplet,
    not_dyck,
    height_too_small,
    division_by_non_unit,
    sqrt_of_non_unit,
    compose_nonzero_constant,
    negative_exponent_residue,
    unknown_name,
    bad_k,
    bad_input,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace polyforge
