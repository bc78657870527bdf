#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace injectsim {

/// Simulation time in integer microseconds. Integer arithmetic keeps event
/// ordering and trace formatting identical across platforms and runs.
class SimTime {
public:
    constexpr SimTime() = default;

    static constexpr SimTime from_micros(std::int64_t us) {
        SimTime t;
        t.us_ = us;
        return t;
    }

    static SimTime from_seconds(double s) {
        // round-to-nearest keeps 0.1s-style scenario values exact enough
        const double us = s * 1e6;
        return from_micros(static_cast<std::int64_t>(us < 0 ? us - 0.5 : us + 0.5));
    }

    constexpr std::int64_t micros() const { return us_; }
    double seconds() const { return static_cast<double>(us_) / 1e6; }

    /// Fixed "<sec>.<6-digit frac>" form used in trace lines.
    std::string str() const;

    friend constexpr SimTime operator+(SimTime a, SimTime b) { return from_micros(a.us_ + b.us_); }
    friend constexpr SimTime operator-(SimTime a, SimTime b) { return from_micros(a.us_ - b.us_); }
    auto operator<=>(const SimTime&) const = default;

private:
    std::int64_t us_ = 0;
};

struct DeviceId {
    std::uint32_t value = 0;
    auto operator<=>(const DeviceId&) const = default;
};

/// Canonical clique identifier: the smallest member DeviceId.
struct CliqueId {
    std::uint32_t value = 0;
    constexpr CliqueId() = default;
    constexpr explicit CliqueId(std::uint32_t v) : value(v) {}
    constexpr explicit CliqueId(DeviceId d) : value(d.value) {}
    auto operator<=>(const CliqueId&) const = default;
};

struct Vec2 {
    double x = 0;
    double y = 0;
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    bool operator==(const Vec2&) const = default;
};

double distance(Vec2 a, Vec2 b);

struct Rect {
    double x = 0;
    double y = 0;
    double width = 0;
    double height = 0;
    bool contains(Vec2 p) const {
        return p.x >= x && p.x <= x + width && p.y >= y && p.y <= y + height;
    }
    bool operator==(const Rect&) const = default;
};

/// Scenario-level misuse: bad config, dangling references, scheduling into
/// the past. The CLI maps this to exit code 1.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A violated runtime invariant; aborts the run. CLI exit code 2.
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 14695981039346656037ull);
std::uint64_t fnv1a64(const std::string& s, std::uint64_t seed = 14695981039346656037ull);

}  // namespace injectsim
