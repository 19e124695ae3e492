#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace gauth {

/// 8-byte opaque group identifier.
using GroupId = std::array<uint8_t, 8>;

/// 16-byte opaque member identifier.
using MemberId = std::array<uint8_t, 16>;

/// Builds an id from a label, zero-padded; throws if the label is longer
/// than the id width.
GroupId group_id_from_label(const std::string& label);
MemberId member_id_from_label(const std::string& label);

/// Printable form: the label up to the first NUL, or hex if unprintable.
std::string label_of(const GroupId& id);
std::string label_of(const MemberId& id);

} // namespace gauth
