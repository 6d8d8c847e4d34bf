#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evoc {

enum class BodyPart : std::uint8_t { LeftArm, RightArm, LeftLeg, RightLeg, Head, Hips };

inline constexpr std::size_t kBodyPartCount = 6;

inline constexpr std::array<BodyPart, kBodyPartCount> kBodyParts{
    BodyPart::LeftArm, BodyPart::RightArm, BodyPart::LeftLeg,
    BodyPart::RightLeg, BodyPart::Head, BodyPart::Hips};

/// Three-valued body-part placement. Down and Up are the active positions.
enum class Position : std::int8_t { Down = -1, Neutral = 0, Up = 1 };

constexpr bool is_active(Position p) { return p != Position::Neutral; }

/// Symmetric partner of a limb; Head and Hips have none.
constexpr std::optional<BodyPart> counterpart(BodyPart part) {
    switch (part) {
        case BodyPart::LeftArm: return BodyPart::RightArm;
        case BodyPart::RightArm: return BodyPart::LeftArm;
        case BodyPart::LeftLeg: return BodyPart::RightLeg;
        case BodyPart::RightLeg: return BodyPart::LeftLeg;
        default: return std::nullopt;
    }
}

std::string_view to_string(BodyPart part);

/// One placement of all six body parts. Encodes as six characters from
/// {D,N,U} in BodyPart order, e.g. "UUNNND".
class Action {
public:
    static constexpr std::uint16_t kCount = 729;  // 3^6

    constexpr Action() = default;
    constexpr explicit Action(std::array<Position, kBodyPartCount> positions)
        : positions_(positions) {}

    constexpr Position operator[](BodyPart part) const {
        return positions_[static_cast<std::size_t>(part)];
    }
    constexpr void set(BodyPart part, Position p) {
        positions_[static_cast<std::size_t>(part)] = p;
    }
    constexpr const std::array<Position, kBodyPartCount>& positions() const {
        return positions_;
    }

    int active_count() const;

    /// Index in [0, 729) matching the enumeration order of enumerate_actions().
    std::uint16_t code() const;
    static Action from_code(std::uint16_t code);

    std::string encode() const;
    /// Throws std::invalid_argument on malformed text.
    static Action decode(std::string_view text);

    friend constexpr bool operator==(const Action&, const Action&) = default;
    friend constexpr auto operator<=>(const Action&, const Action&) = default;

private:
    std::array<Position, kBodyPartCount> positions_{};
};

/// All parts neutral: the immobile starting action.
constexpr Action neutral_action() { return Action{}; }

/// All 729 actions, lexicographic over the six positions with Down < Neutral < Up.
std::vector<Action> enumerate_actions();

/// Ordered, non-empty sequence of actions implemented as one multi-step action.
class Chain {
public:
    /// Throws std::invalid_argument if steps is empty.
    explicit Chain(std::vector<Action> steps);
    explicit Chain(Action single) : steps_{single} {}

    std::size_t size() const { return steps_.size(); }
    const Action& back() const { return steps_.back(); }
    const Action& operator[](std::size_t i) const { return steps_[i]; }
    std::span<const Action> steps() const { return steps_; }

    void push_back(Action a) { steps_.push_back(a); }
    void replace_back(Action a) { steps_.back() = a; }

    /// Steps joined by "|".
    std::string encode() const;
    static Chain decode(std::string_view text);

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain&, const Chain&) = default;

private:
    std::vector<Action> steps_;
};

}  // namespace evoc
