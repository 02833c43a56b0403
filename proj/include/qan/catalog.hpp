#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qan/backends.hpp"
#include "qan/binding.hpp"
#include "qan/sampler.hpp"

namespace qan {

enum class Mode { Exact, RationalQ, Numeric };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s); // throws ConfigError on junk

// A catalog entry: one identity, with both sides written once as a
// backend-generic evaluator and instantiated for whichever value domains
// the identity supports. Finite sums run in the exact rational domain;
// identities involving infinite products do not.
struct EntryDef {
    std::string id;
    std::string anchor; // stable internal label, used only for grouping
    std::vector<int> ranks{1};
    bool exact = false;
    bool rational = false;
    bool numeric = false;
    std::string reduces_to; // id of the rank-1 specialization, if registered
    long floor = 20;        // exact-mode comparison floor (q-adic)
    // Highest rank whose exact-mode run converges on a truncated window; at
    // higher ranks shell valuations sink and the verifier switches to the
    // numeric domain instead. Zero means exact works at every listed rank.
    int exact_rank_cap = 0;
    std::string notes;

    std::function<Series(const ExactBackend&, const BindingSpec&)> e_lhs, e_rhs;
    std::function<Rational(const RationalBackend&, const BindingSpec&)> r_lhs, r_rhs;
    std::function<BigReal(const NumericBackend&, const BindingSpec&)> n_lhs, n_rhs;

    // Fill a BindingSpec for the given rank. For numeric mode q carries the
    // evaluation point so magnitude constraints can be enforced; for the
    // rational domain it carries the substitution point.
    std::function<void(Sampler&, BindingSpec&, Mode, const Rational& q)> sample;

    bool supports(Mode m) const {
        switch (m) {
            case Mode::Exact: return exact;
            case Mode::RationalQ: return rational;
            case Mode::Numeric: return numeric;
        }
        return false;
    }
    bool supports_rank(int n) const {
        for (int r : ranks) {
            if (r == n) return true;
        }
        return false;
    }
};

class Registry {
public:
    // Attach one generic evaluator pair to every supported domain.
    template <class L, class R>
    void add(EntryDef def, L lhs, R rhs) {
        if (def.exact) {
            def.e_lhs = lhs;
            def.e_rhs = rhs;
        }
        if (def.rational) {
            def.r_lhs = lhs;
            def.r_rhs = rhs;
        }
        if (def.numeric) {
            def.n_lhs = lhs;
            def.n_rhs = rhs;
        }
        insert(std::move(def));
    }

    const EntryDef* find(const std::string& id) const;
    std::vector<const EntryDef*> all() const; // sorted by id

private:
    void insert(EntryDef def);
    std::map<std::string, EntryDef> entries_;
};

// The process-wide catalog, populated on first use.
const Registry& catalog();

} // namespace qan
