#include "equiscore/ndiff/loss.hpp"

#include <cmath>
#include <stdexcept>

#include "equiscore/io.hpp"

namespace equiscore::ndiff {

GradientTape loss_backward(const DenseNet& net, const ScalarLossGraph& loss) {
  GradientTape tape = GradientTape::zeros(net);
  tape.loss = loss.value_and_grad(net, tape);
  if (!std::isfinite(tape.loss))
    throw std::runtime_error("loss_backward: non-finite loss value " + fmt_double(tape.loss));
  return tape;
}

}  // namespace equiscore::ndiff
