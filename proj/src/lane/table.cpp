#include "hmdp/lane/table.hpp"

namespace hmdp::lane {

TransitionTable::TransitionTable() {
    for (int s = 0; s < kStateCount; ++s)
        for (int a = 0; a < kActionCount; ++a) {
            to_[static_cast<size_t>(s)][static_cast<size_t>(a)] = s; // self-loop
            defined_[static_cast<size_t>(s)][static_cast<size_t>(a)] = false;
        }
}

ManeuverState TransitionTable::next(ManeuverState s, ManeuverAction a) const {
    return state_from_index(to_[static_cast<size_t>(state_index(s))][static_cast<size_t>(action_index(a))]);
}

bool TransitionTable::defined(ManeuverState s, ManeuverAction a) const {
    return defined_[static_cast<size_t>(state_index(s))][static_cast<size_t>(action_index(a))];
}

void TransitionTable::set(ManeuverState s, ManeuverAction a, ManeuverState to) {
    to_[static_cast<size_t>(state_index(s))][static_cast<size_t>(action_index(a))] = state_index(to);
    defined_[static_cast<size_t>(state_index(s))][static_cast<size_t>(action_index(a))] = true;
}

TransitionTable TransitionTable::standard() {
    using S = ManeuverState;
    using A = ManeuverAction;
    TransitionTable t;

    t.set(S::Cruise, A::Wait, S::Cruise);
    t.set(S::Cruise, A::Initiate, S::QuickLaneChange);
    t.set(S::Cruise, A::Recover, S::Cruise);
    t.set(S::Cruise, A::Abandon, S::Braking);
    t.set(S::Cruise, A::Maintain, S::Cruise);

    t.set(S::Braking, A::SpeedUp, S::Acceleration);
    t.set(S::Braking, A::Wait, S::Braking);
    t.set(S::Braking, A::Initiate, S::QuickLaneChange);
    t.set(S::Braking, A::Recover, S::Cruise);

    t.set(S::QuickLaneChange, A::SpeedUp, S::Acceleration);
    t.set(S::QuickLaneChange, A::Recover, S::Cruise);
    t.set(S::QuickLaneChange, A::Abandon, S::Return);
    t.set(S::QuickLaneChange, A::Maintain, S::QuickLaneChange);

    t.set(S::Acceleration, A::Initiate, S::QuickLaneChange);
    t.set(S::Acceleration, A::Recover, S::Cruise);
    t.set(S::Acceleration, A::Maintain, S::Acceleration);

    t.set(S::Return, A::Wait, S::Braking);
    t.set(S::Return, A::Initiate, S::QuickLaneChange);
    t.set(S::Return, A::Recover, S::Cruise);
    t.set(S::Return, A::Maintain, S::Return);

    return t;
}

} // namespace hmdp::lane
