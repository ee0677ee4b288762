#pragma once

#include <stdexcept>
#include <string>

namespace hoops {

enum class errc {
    parse_error,
    order_mismatch,        // the two residua induce different orders
    invalid_order,         // derived relation is not a partial order with the declared extremes
    not_meet_semilattice,
    table_mismatch,        // declared meet/join block disagrees with the derived one
    profile_mismatch,
    unbound_variable,
    unbounded_algebra,
    not_basic,             // prime/minimal-prime classification refused outside basic hoops
    g_is_top,
    not_normal,
    not_involutive,
    budget_exceeded,
    size_limit,
    unknown_preset,
    no_maxfilter_predicate,
    not_in_mnp,
    not_strong_unit,
    not_positive_unit,
    io_error,
    domain_error,
    internal_check,        // a cross-checked identity failed; indicates a bug or invalid input
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::invalid_order: return "InvalidOrder";
        case errc::not_meet_semilattice: return "NotMeetSemilattice";
        case errc::table_mismatch: return "TableMismatch";
        case errc::profile_mismatch: return "ProfileMismatch";
        case errc::unbound_variable: return "UnboundVariable";
        case errc::unbounded_algebra: return "UnboundedAlgebra";
        case errc::not_basic: return "NotBasic";
        case errc::g_is_top: return "GIsTop";
        case errc::not_normal: return "NotNormal";
        case errc::not_involutive: return "NotInvolutive";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::size_limit: return "SizeLimit";
        case errc::unknown_preset: return "UnknownPreset";
        case errc::no_maxfilter_predicate: return "NoMaxFilterPredicate";
        case errc::not_in_mnp: return "NotInMNP";
        case errc::not_strong_unit: return "NotStrongUnit";
        case errc::not_positive_unit: return "NotPositiveUnit";
        case errc::io_error: return "IoError";
        case errc::domain_error: return "DomainError";
        case errc::internal_check: return "InternalCheck";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

inline void internal_assert(bool ok, const std::string& what) {
    if (!ok) fail(errc::internal_check, what);
}

} // namespace hoops
