#include "evoc/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace evoc {

std::string_view to_string(BodyPart part) {
    switch (part) {
        case BodyPart::LeftArm: return "LeftArm";
        case BodyPart::RightArm: return "RightArm";
        case BodyPart::LeftLeg: return "LeftLeg";
        case BodyPart::RightLeg: return "RightLeg";
        case BodyPart::Head: return "Head";
        case BodyPart::Hips: return "Hips";
    }
    return "?";
}

int Action::active_count() const {
    return static_cast<int>(std::count_if(positions_.begin(), positions_.end(), is_active));
}

// Most significant digit is LeftArm; digit = position + 1.
std::uint16_t Action::code() const {
    std::uint16_t c = 0;
    for (Position p : positions_) {
        c = static_cast<std::uint16_t>(c * 3 + (static_cast<int>(p) + 1));
    }
    return c;
}

Action Action::from_code(std::uint16_t code) {
    if (code >= kCount) throw std::invalid_argument("action code out of range");
    Action a;
    for (std::size_t i = kBodyPartCount; i-- > 0;) {
        a.positions_[i] = static_cast<Position>(code % 3 - 1);
        code /= 3;
    }
    return a;
}

std::string Action::encode() const {
    std::string s(kBodyPartCount, 'N');
    for (std::size_t i = 0; i < kBodyPartCount; ++i) {
        if (positions_[i] == Position::Down) s[i] = 'D';
        if (positions_[i] == Position::Up) s[i] = 'U';
    }
    return s;
}

Action Action::decode(std::string_view text) {
    if (text.size() != kBodyPartCount) {
        throw std::invalid_argument("action encoding must have six characters: " +
                                    std::string(text));
    }
    Action a;
    for (std::size_t i = 0; i < kBodyPartCount; ++i) {
        switch (text[i]) {
            case 'D': a.positions_[i] = Position::Down; break;
            case 'N': a.positions_[i] = Position::Neutral; break;
            case 'U': a.positions_[i] = Position::Up; break;
            default:
                throw std::invalid_argument("bad position character in action: " +
                                            std::string(text));
        }
    }
    return a;
}

std::vector<Action> enumerate_actions() {
    std::vector<Action> all;
    all.reserve(Action::kCount);
    for (std::uint16_t c = 0; c < Action::kCount; ++c) all.push_back(Action::from_code(c));
    return all;
}

Chain::Chain(std::vector<Action> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("chain must have at least one step");
}

std::string Chain::encode() const {
    std::string s;
    s.reserve(steps_.size() * (kBodyPartCount + 1));
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i > 0) s.push_back('|');
        s += steps_[i].encode();
    }
    return s;
}

Chain Chain::decode(std::string_view text) {
    std::vector<Action> steps;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        steps.push_back(Action::decode(text.substr(start, bar - start)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return Chain(std::move(steps));
}

}  // namespace evoc
