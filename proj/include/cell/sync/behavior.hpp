#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cell/sync/offer.hpp"
#include "cell/sync/value.hpp"

namespace cell::sync {

/// Dynamic part of a process: a state label plus opaque process-local data.
/// The engine never interprets the data; offers and updates do.
struct ProcessState {
    StateLabel label = 0;
    Value data;

    friend bool operator==(const ProcessState&, const ProcessState&) = default;
};

/// Static description of a process: a deterministic map from state to the
/// finite set of offers available there. An empty offer set is the STUCK
/// marker; the process then never moves again.
struct Behavior {
    std::string name;
    ProcessState initial;
    std::function<std::vector<Offer>(const ProcessState&)> offers_of;
};

} // namespace cell::sync
