#pragma once

namespace commtrace {

// Matrix size n and number of matrix (or vector) copies m.
class RingConfig {
 public:
  // Throws std::invalid_argument unless both are positive.
  RingConfig(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }

  bool operator==(const RingConfig&) const = default;

 private:
  int n_;
  int m_;
};

}  // namespace commtrace
