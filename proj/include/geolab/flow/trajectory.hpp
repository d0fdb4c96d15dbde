#pragma once

#include <geolab/common/error.hpp>

#include <string>
#include <vector>

namespace geolab::flow {

struct StepRecord {
    double t = 0.0;   // time at the start of the attempt
    double dt = 0.0;
    bool accepted = true;
    std::string note;
};

enum class StopReason { EndTime, AreaCollapse, Degenerate, MaxSteps };

std::string to_string(StopReason r);

/// Recorded states of a flow. times[i], states[i], measure[i] and
/// max_speed[i] describe the same instant; times strictly increase.
template <class State>
struct FlowTrajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<double> measure;   // area for MCF, volume for Ricci flow
    std::vector<double> max_speed; // speed of the step that produced the state (0 initially)
    std::vector<StepRecord> step_log;
    StopReason stop = StopReason::EndTime;
    std::string message;

    void record(double t, State s, double m, double speed)
    {
        if (!times.empty() && !(t > times.back())) throw Error("trajectory times must increase strictly");
        times.push_back(t);
        states.push_back(std::move(s));
        measure.push_back(m);
        max_speed.push_back(speed);
    }
    size_t size() const { return times.size(); }
};

} // namespace geolab::flow
