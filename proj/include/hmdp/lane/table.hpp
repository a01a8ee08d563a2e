#pragma once

#include "hmdp/lane/params.hpp"

#include <array>

namespace hmdp::lane {

/// Total 5x6 maneuver transition table. Pairs outside the maneuver diagram
/// are self-loops and flagged undefined; the model keeps them out of the
/// admissible action set.
class TransitionTable {
public:
    TransitionTable();

    ManeuverState next(ManeuverState s, ManeuverAction a) const;
    bool defined(ManeuverState s, ManeuverAction a) const;

    void set(ManeuverState s, ManeuverAction a, ManeuverState to);

    /// The lane-change maneuver diagram:
    ///   Cruise:   Wait->Cruise, Initiate->QLC, Recover->Cruise,
    ///             Abandon->Braking (yield), Maintain->Cruise
    ///   Braking:  SpeedUp->Accel, Wait->Braking, Initiate->QLC, Recover->Cruise
    ///   QLC:      SpeedUp->Accel, Recover->Cruise, Abandon->Return, Maintain->QLC
    ///   Accel:    Initiate->QLC, Recover->Cruise, Maintain->Accel
    ///   Return:   Wait->Braking, Initiate->QLC, Recover->Cruise, Maintain->Return
    static TransitionTable standard();

private:
    std::array<std::array<int, kActionCount>, kStateCount> to_{};
    std::array<std::array<bool, kActionCount>, kStateCount> defined_{};
};

} // namespace hmdp::lane
