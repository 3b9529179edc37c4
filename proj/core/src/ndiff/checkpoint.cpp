#include "equiscore/ndiff/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace equiscore::ndiff {

static_assert(std::endian::native == std::endian::little,
              "checkpoint format assumes a little-endian host");

void save_checkpoint(const DenseNet& net, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("save_checkpoint: cannot open " + path);
  f << "equiscore-net " << kCheckpointVersion << ' ' << activation_name(net.activation);
  for (int w : net.widths) f << ' ' << w;
  f << '\n';
  for (int k = 0; k < net.n_layers(); ++k) {
    const Eigen::MatrixXd& w = net.weights[k];
    for (long i = 0; i < w.rows(); ++i)
      for (long j = 0; j < w.cols(); ++j) {
        double v = w(i, j);
        f.write(reinterpret_cast<const char*>(&v), sizeof(v));
      }
    const Eigen::VectorXd& b = net.biases[k];
    f.write(reinterpret_cast<const char*>(b.data()),
            static_cast<std::streamsize>(sizeof(double)) * b.size());
  }
  if (!f) throw std::runtime_error("save_checkpoint: write failed for " + path);
}

DenseNet load_checkpoint(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("load_checkpoint: cannot open " + path);
  std::string header;
  std::getline(f, header);
  std::istringstream hs(header);
  std::string magic, act_name;
  int version = 0;
  hs >> magic >> version >> act_name;
  if (magic != "equiscore-net" || version != kCheckpointVersion)
    throw std::runtime_error("load_checkpoint: bad header in " + path);
  std::vector<int> widths;
  for (int w; hs >> w;) widths.push_back(w);
  if (widths.size() < 2) throw std::runtime_error("load_checkpoint: bad widths in " + path);

  DenseNet net = net_init(widths, activation_from_name(act_name), 0);
  for (int k = 0; k < net.n_layers(); ++k) {
    Eigen::MatrixXd& w = net.weights[k];
    for (long i = 0; i < w.rows(); ++i)
      for (long j = 0; j < w.cols(); ++j) {
        double v;
        f.read(reinterpret_cast<char*>(&v), sizeof(v));
        w(i, j) = v;
      }
    Eigen::VectorXd& b = net.biases[k];
    f.read(reinterpret_cast<char*>(b.data()),
           static_cast<std::streamsize>(sizeof(double)) * b.size());
  }
  if (!f) throw std::runtime_error("load_checkpoint: truncated file " + path);
  return net;
}

}  // namespace equiscore::ndiff
