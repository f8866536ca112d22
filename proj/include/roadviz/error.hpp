#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace roadviz {

enum class errc {
  too_few_tokens,
  vertex_out_of_range,
  malformed_token,
  bad_header,
  trailing_garbage,
  component_not_strongly_connected,
  incomplete_automaton,
  too_large,
  not_out_regular,
  invalid_argument,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::too_few_tokens: return "TooFewTokens";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::malformed_token: return "MalformedToken";
    case errc::bad_header: return "BadHeader";
    case errc::trailing_garbage: return "TrailingGarbage";
    case errc::component_not_strongly_connected: return "ComponentNotStronglyConnected";
    case errc::incomplete_automaton: return "IncompleteAutomaton";
    case errc::too_large: return "TooLarge";
    case errc::not_out_regular: return "NotOutRegular";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

// Every failure raised by the library. what() is "<Code>: <detail>".
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace roadviz
