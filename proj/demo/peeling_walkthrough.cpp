// Walks the peeling decoder over the [5,1] repetition code with a check
// collection that can reduce, but not correct, every 4-erasure pattern:
// {2,3,4} is a stopping set even though the pattern is correctable.

#include <iostream>

#include "gecs/gecs.hpp"

int main() {
  const gecs::BitMatrix pcm =
      gecs::BitMatrix::from_strings({"10001", "01100", "01111", "01010"});
  const gecs::Code code(pcm);
  const gecs::CheckCollection checks(pcm.col_count(), pcm.rows());

  std::cout << "repetition code [5,1], checks:\n";
  gecs::write_matrix(std::cout, pcm);

  std::cout << "\n4-erasure reducing: "
            << (gecs::is_m_erasure_reducing(checks, code, 4) ? "yes" : "no")
            << '\n';
  std::cout << "4-erasure decoding: "
            << (gecs::is_m_erasure_decoding(checks, code, 4) ? "yes" : "no")
            << '\n';

  const auto received = gecs::ReceivedWord::from_string("????0");
  std::cout << "\npeeling \"" << received.to_string() << "\":\n";
  const auto trace = gecs::peel_decode(checks, received);
  for (const auto& step : trace.steps)
    std::cout << "  check " << step.check_index + 1 << " resolves position "
              << step.position + 1 << " = " << step.value << '\n';
  if (trace.decoded) {
    std::cout << "decoded: " << trace.word.to_string() << '\n';
  } else {
    std::cout << "stuck; residual erasures:";
    for (auto p : trace.residual) std::cout << ' ' << p + 1;
    std::cout << '\n';
  }

  std::cout << "\nstopping sets up to size 3:\n";
  for (const auto& entry : gecs::enumerate_stopping_sets(checks, 3, &code)) {
    std::cout << "  {";
    for (std::size_t i = 0; i < entry.positions.size(); ++i)
      std::cout << (i ? "," : "") << entry.positions[i] + 1;
    std::cout << "} "
              << (entry.label == gecs::StoppingSetEntry::Label::correctable
                      ? "correctable"
                      : "codeword-support")
              << '\n';
  }
  return 0;
}
