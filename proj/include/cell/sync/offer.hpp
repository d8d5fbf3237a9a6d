#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cell/sync/value.hpp"

namespace cell::sync {

/// Handle to a gate registered in a Composition. Gates are the named
/// synchronization points of the system; a rendezvous on a gate fires only
/// when every participant offers it.
struct GateId {
    std::uint32_t index = UINT32_MAX;

    bool valid() const { return index != UINT32_MAX; }
    friend bool operator==(const GateId&, const GateId&) = default;
    friend auto operator<=>(const GateId&, const GateId&) = default;
};

enum class GateVisibility { External, Internal, Status };

/// One position of an offer: either a concrete value (!v in process algebra
/// notation) or a variable to be bound (?x).
struct OfferSlot {
    enum class Kind { Emit, Accept };

    Kind kind = Kind::Emit;
    Value value;          // Emit only
    std::string variable; // Accept only

    static OfferSlot emit(Value v) { return {Kind::Emit, std::move(v), {}}; }
    static OfferSlot accept(std::string var) { return {Kind::Accept, {}, std::move(var)}; }
};

using StateLabel = std::uint32_t;

/// Selection predicate evaluated under the offer's own accepted variables.
/// Must be pure; a false result forbids the rendezvous.
using Predicate = std::function<bool(const Binding&)>;

/// Rewrites the process-local data component of a state when the offer
/// fires. Receives the current data and the offer's own variable binding.
using DataUpdate = std::function<Value(const Value&, const Binding&)>;

/// A process's declared readiness on one gate. A behavior state may expose
/// several offers (external choice), including several on the same gate.
struct Offer {
    GateId gate;
    std::vector<OfferSlot> slots;
    Predicate predicate; // null means trivially true
    StateLabel next = 0;
    DataUpdate update;   // null means data unchanged

    Offer() = default;
    Offer(GateId g, std::vector<OfferSlot> s, StateLabel n)
        : gate(g), slots(std::move(s)), next(n) {}
    Offer(GateId g, std::vector<OfferSlot> s, Predicate p, StateLabel n, DataUpdate u = nullptr)
        : gate(g), slots(std::move(s)), predicate(std::move(p)), next(n), update(std::move(u)) {}
};

/// Extracts the variable environment an offer sees for a full slot-value
/// assignment (its own accepted variables only).
Binding offer_binding(const Offer& offer, const std::vector<Value>& slot_values);

/// Value matching across all offers of one rendezvous. For each slot
/// position, every emitted value must be structurally equal and every
/// accepted variable binds to that value. A position with only accepts
/// fails: the engine supports no unconstrained wildcard rendezvous. All
/// predicates are then evaluated (each under its own variables); any false
/// predicate fails the match.
///
/// Precondition: offers are on one gate with equal slot counts.
std::optional<Binding> unify(const std::vector<Offer>& offers);
std::optional<Binding> unify(const std::vector<const Offer*>& offers);

} // namespace cell::sync
