#ifndef ROBBO_PLUGIN_HPP
#define ROBBO_PLUGIN_HPP

#include <array>
#include <mutex>
#include <optional>
#include <string>

#include "robbo/sampler.hpp"

namespace robbo {

/// Environment variable bounding each plugin call, in seconds.
inline constexpr const char* kPluginTimeoutEnv = "ROBBO_PLUGIN_TIMEOUT_S";
inline constexpr double kDefaultPluginTimeoutS = 300.0;

double plugin_timeout_from_env();

/// Runs an external command once per request: one JSON line on stdin,
/// one JSON line `{"z":[f1,f2],"x":[...]}` expected on stdout.
///
/// Calls on one instance are serialized. Anchor answers are cached since the
/// protocol requires deterministic replies.
class PluginBackend final : public Backend {
 public:
  explicit PluginBackend(std::string command, double timeout_s = plugin_timeout_from_env());

  [[nodiscard]] SampleResult anchor(AnchorWhich which) const override;
  [[nodiscard]] SampleResult sample(const SampleRequest& request) const override;
  [[nodiscard]] std::string describe() const override { return "plugin: " + command_; }

  [[nodiscard]] const std::string& command() const noexcept { return command_; }

 private:
  [[nodiscard]] SampleResult call(const std::string& request_line) const;

  std::string command_;
  double timeout_s_;
  mutable std::mutex mutex_;
  mutable std::array<std::optional<SampleResult>, 2> anchors_;
};

/// Parses one plugin reply line; throws Error(SamplerFailure) when malformed.
SampleResult parse_plugin_reply(const std::string& line);

}  // namespace robbo

#endif  // ROBBO_PLUGIN_HPP
