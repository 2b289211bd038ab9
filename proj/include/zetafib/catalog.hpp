#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetafib/series.hpp"

namespace zetafib {

/// Sweep point. Entries declare which parameters they consume; predicates
/// validate values before any series or closed form is built.
struct ParamSet {
    std::optional<long> m;
    std::optional<long> n;
};

/// One verifiable identity: a parameter domain, a series builder for the
/// left side, and a closed-form builder for the right side. `formula` is the
/// self-contained statement exported under the `paper_ref` report key.
struct IdentityEntry {
    std::string id;
    std::string title;
    std::string formula;
    std::string domain_description;
    bool uses_m = false;
    bool uses_n = false;
    /// Verification findings are reported, never auto-corrected; an entry
    /// known to disagree would be flagged here instead of being patched.
    bool expect_discrepancy = false;
    std::function<std::optional<std::string>(const ParamSet&)> domain_violation;
    std::function<SeriesSpec(const ParamSet&, Precision)> lhs;
    std::function<Real(const ParamSet&, Precision)> rhs;
};

/// The immutable identity registry (ids are stable API).
const std::vector<IdentityEntry>& catalog_entries();

/// Entry lookup by id; nullptr when unknown.
const IdentityEntry* find_entry(std::string_view id);

/// Series for the entry's left side at the given parameters. Throws
/// DomainError naming the violated constraint when p is out of domain.
SeriesSpec build_lhs(const IdentityEntry& entry, const ParamSet& p, Precision prec);

/// Closed form for the entry's right side.
Real build_rhs(const IdentityEntry& entry, const ParamSet& p, Precision prec);

} // namespace zetafib
