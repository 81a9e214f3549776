#ifndef OPINEQ_VERSION_HPP
#define OPINEQ_VERSION_HPP

namespace opineq {

inline constexpr const char* kToolName = "opineq";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

} // namespace opineq

#endif
