#pragma once

namespace graphdisc {

inline constexpr const char* library_version = "0.1.0";
inline constexpr const char* report_schema = "graphdisc/v1";

} // namespace graphdisc
