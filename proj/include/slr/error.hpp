#pragma once

#include <stdexcept>
#include <string>

namespace slr {

enum class errc {
    ambiguous_class,
    non_integer_winding,
    not_central,
    elliptic_has_no_euler_lift,
    central_boundary,
    not_a_representation,
    elliptic_boundary,
    integrality_violation,
    sum_not_multiple_of_2pi,
    central_commutator,
    not_realizable,
    budget_exhausted,
    infeasible_sigma,
    infeasible_branch,
    precondition_violated,
    central_cut,
    rank_ambiguous,
    degenerate_form,
    too_large,
    out_of_domain,
    bad_input,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace slr
