#include "gauth/ids.hpp"

#include <cctype>

#include "gauth/bytes.hpp"
#include "gauth/errors.hpp"

namespace gauth {

namespace {

template <size_t N>
std::array<uint8_t, N> from_label(const std::string& label) {
    if (label.size() > N)
        throw ValidationError("identifier label longer than " + std::to_string(N) + " bytes: " + label);
    std::array<uint8_t, N> id{};
    for (size_t i = 0; i < label.size(); ++i) id[i] = static_cast<uint8_t>(label[i]);
    return id;
}

template <size_t N>
std::string to_label(const std::array<uint8_t, N>& id) {
    std::string out;
    for (uint8_t b : id) {
        if (b == 0) break;
        if (!std::isprint(b)) return to_hex(std::span<const uint8_t>(id.data(), id.size()));
        out.push_back(static_cast<char>(b));
    }
    return out;
}

} // namespace

GroupId group_id_from_label(const std::string& label) { return from_label<8>(label); }
MemberId member_id_from_label(const std::string& label) { return from_label<16>(label); }

std::string label_of(const GroupId& id) { return to_label(id); }
std::string label_of(const MemberId& id) { return to_label(id); }

} // namespace gauth
