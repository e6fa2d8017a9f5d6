#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knightpaths {

enum class errc {
    unknown_symbol,
    negative_prefix,
    not_on_axis,
    not_zigzag,
    out_of_range,
    non_unit_constant_term,
    not_contracting,
    not_divisible,
    not_peakless,
    not_motzkin,
    not_dyck,
    odd_length,
    empty_input,
    cap_exceeded,
    invalid_argument,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::unknown_symbol: return "UnknownSymbol";
        case errc::negative_prefix: return "NegativePrefix";
        case errc::not_on_axis: return "NotOnAxis";
        case errc::not_zigzag: return "NotZigzag";
        case errc::out_of_range: return "OutOfRange";
        case errc::non_unit_constant_term: return "NonUnitConstantTerm";
        case errc::not_contracting: return "NotContracting";
        case errc::not_divisible: return "NotDivisible";
        case errc::not_peakless: return "NotPeakless";
        case errc::not_motzkin: return "NotMotzkin";
        case errc::not_dyck: return "NotDyck";
        case errc::odd_length: return "OddLength";
        case errc::empty_input: return "EmptyInput";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Single exception type for every engine; `code()` names the violated contract,
/// `position()` is set for errors tied to an index in an input word.
class error : public std::runtime_error {
public:
    error(errc code, std::string detail, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(format(code, detail, position)), code_(code), position_(position) {}

    errc code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    static std::string format(errc code, const std::string& detail, std::optional<std::size_t> pos) {
        std::string msg(to_string(code));
        if (pos) msg += "(" + std::to_string(*pos) + ")";
        if (!detail.empty()) msg += ": " + detail;
        return msg;
    }

    errc code_;
    std::optional<std::size_t> position_;
};

}  // namespace knightpaths
