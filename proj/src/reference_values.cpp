#include "rct/evaluation.hpp"

namespace rct {

namespace {

// Published simulation tables, quoted verbatim for side-by-side context
// in benchmark reports (50 replications at n=100, p=2000 for models 1-6
// and n=500, p=2500 for models 7-10).  Values are not recomputed here.
struct Published {
  int model;
  const char* case_label;
  const char* method;
  double fpr, fpr_sd, fnr, fnr_sd, l2, l2_sd;
  double rfpr, rfpr_sd, rfnr, rfnr_sd;  // models 9-10 only, else -1
};

constexpr double kNone = -1.0;

const Published kTable[] = {
    {1, "a", "lasso", 0.021, 0.009, 0.199, 0.130, 3.198, 0.475, kNone, 0, 0, 0},
    {1, "a", "adalasso", 0.020, 0.008, 0.212, 0.143, 3.787, 0.821, kNone, 0, 0, 0},
    {1, "a", "scad", 0.007, 0.006, 0.422, 0.137, 4.148, 0.950, kNone, 0, 0, 0},
    {1, "a", "mcp", 0.003, 0.002, 0.625, 0.065, 4.709, 0.537, kNone, 0, 0, 0},
    {1, "a", "rct", 0.010, 0.008, 0.177, 0.117, 2.860, 0.888, kNone, 0, 0, 0},
    {2, "a", "lasso", 0.017, 0.010, 0.165, 0.100, 3.032, 0.407, kNone, 0, 0, 0},
    {2, "a", "adalasso", 0.016, 0.007, 0.180, 0.111, 3.716, 0.816, kNone, 0, 0, 0},
    {2, "a", "scad", 0.008, 0.007, 0.474, 0.123, 4.750, 1.032, kNone, 0, 0, 0},
    {2, "a", "mcp", 0.004, 0.002, 0.654, 0.060, 5.430, 0.571, kNone, 0, 0, 0},
    {2, "a", "rct", 0.004, 0.002, 0.071, 0.112, 2.041, 0.754, kNone, 0, 0, 0},
    {3, "a", "lasso", 0.014, 0.008, 0.153, 0.091, 3.035, 0.391, kNone, 0, 0, 0},
    {3, "a", "adalasso", 0.014, 0.008, 0.156, 0.111, 3.739, 0.815, kNone, 0, 0, 0},
    {3, "a", "scad", 0.010, 0.006, 0.575, 0.107, 5.979, 1.054, kNone, 0, 0, 0},
    {3, "a", "mcp", 0.003, 0.002, 0.694, 0.049, 6.201, 0.536, kNone, 0, 0, 0},
    {3, "a", "rct", 0.002, 0.002, 0.018, 0.035, 1.466, 0.502, kNone, 0, 0, 0},
    {1, "b", "lasso", 0.019, 0.010, 0.243, 0.140, 3.446, 0.372, kNone, 0, 0, 0},
    {1, "b", "adalasso", 0.018, 0.008, 0.256, 0.130, 4.134, 0.657, kNone, 0, 0, 0},
    {1, "b", "scad", 0.008, 0.005, 0.443, 0.140, 4.233, 0.998, kNone, 0, 0, 0},
    {1, "b", "mcp", 0.003, 0.002, 0.636, 0.069, 4.771, 0.627, kNone, 0, 0, 0},
    {1, "b", "rct", 0.018, 0.016, 0.242, 0.163, 3.879, 0.735, kNone, 0, 0, 0},
    {2, "b", "lasso", 0.017, 0.008, 0.209, 0.101, 3.319, 0.406, kNone, 0, 0, 0},
    {2, "b", "adalasso", 0.016, 0.008, 0.330, 0.104, 4.027, 0.687, kNone, 0, 0, 0},
    {2, "b", "scad", 0.008, 0.006, 0.477, 0.156, 4.772, 1.236, kNone, 0, 0, 0},
    {2, "b", "mcp", 0.003, 0.002, 0.674, 0.060, 5.573, 0.577, kNone, 0, 0, 0},
    {2, "b", "rct", 0.010, 0.009, 0.154, 0.098, 3.331, 0.691, kNone, 0, 0, 0},
    {3, "b", "lasso", 0.014, 0.008, 0.187, 0.087, 3.273, 0.422, kNone, 0, 0, 0},
    {3, "b", "adalasso", 0.013, 0.008, 0.199, 0.107, 4.062, 0.726, kNone, 0, 0, 0},
    {3, "b", "scad", 0.009, 0.007, 0.566, 0.153, 5.726, 1.393, kNone, 0, 0, 0},
    {3, "b", "mcp", 0.003, 0.002, 0.708, 0.058, 6.386, 0.667, kNone, 0, 0, 0},
    {3, "b", "rct", 0.007, 0.005, 0.084, 0.127, 2.939, 0.755, kNone, 0, 0, 0},
    {1, "c", "lasso", 0.018, 0.010, 0.338, 0.162, 3.706, 0.383, kNone, 0, 0, 0},
    {1, "c", "adalasso", 0.019, 0.018, 0.195, 0.156, 4.148, 0.650, kNone, 0, 0, 0},
    {1, "c", "scad", 0.008, 0.005, 0.498, 0.134, 4.390, 1.034, kNone, 0, 0, 0},
    {1, "c", "mcp", 0.003, 0.001, 0.678, 0.069, 4.968, 0.716, kNone, 0, 0, 0},
    {1, "c", "rct", 0.025, 0.156, 0.294, 0.230, 4.305, 0.574, kNone, 0, 0, 0},
    {2, "c", "lasso", 0.017, 0.010, 0.244, 0.106, 3.589, 0.475, kNone, 0, 0, 0},
    {2, "c", "adalasso", 0.016, 0.010, 0.258, 0.114, 4.469, 0.590, kNone, 0, 0, 0},
    {2, "c", "scad", 0.007, 0.005, 0.481, 0.147, 4.722, 1.331, kNone, 0, 0, 0},
    {2, "c", "mcp", 0.003, 0.002, 0.697, 0.054, 5.624, 0.709, kNone, 0, 0, 0},
    {2, "c", "rct", 0.019, 0.018, 0.195, 0.156, 4.148, 0.650, kNone, 0, 0, 0},
    {3, "c", "lasso", 0.014, 0.010, 0.242, 0.093, 3.611, 0.450, kNone, 0, 0, 0},
    {3, "c", "adalasso", 0.012, 0.009, 0.243, 0.105, 4.459, 0.590, kNone, 0, 0, 0},
    {3, "c", "scad", 0.006, 0.006, 0.549, 0.149, 5.599, 1.612, kNone, 0, 0, 0},
    {3, "c", "mcp", 0.003, 0.002, 0.732, 0.047, 6.506, 0.823, kNone, 0, 0, 0},
    {3, "c", "rct", 0.011, 0.011, 0.164, 0.136, 3.886, 0.688, kNone, 0, 0, 0},
    {4, "a", "lasso", 0.040, 0.004, 0.337, 0.135, 4.075, 0.501, kNone, 0, 0, 0},
    {4, "a", "adalasso", 0.033, 0.003, 0.369, 0.138, 4.035, 0.626, kNone, 0, 0, 0},
    {4, "a", "scad", 0.021, 0.007, 0.736, 0.147, 5.849, 1.238, kNone, 0, 0, 0},
    {4, "a", "mcp", 0.008, 0.003, 0.868, 0.084, 6.763, 0.558, kNone, 0, 0, 0},
    {4, "a", "rct", 0.061, 0.007, 0.215, 0.089, 3.982, 0.265, kNone, 0, 0, 0},
    {5, "a", "lasso", 0.041, 0.003, 0.387, 0.126, 4.183, 0.458, kNone, 0, 0, 0},
    {5, "a", "adalasso", 0.033, 0.003, 0.421, 0.134, 3.726, 0.578, kNone, 0, 0, 0},
    {5, "a", "scad", 0.021, 0.007, 0.736, 0.147, 5.849, 1.238, kNone, 0, 0, 0},
    {5, "a", "mcp", 0.008, 0.003, 0.896, 0.065, 7.129, 0.541, kNone, 0, 0, 0},
    {5, "a", "rct", 0.062, 0.009, 0.244, 0.093, 4.023, 0.283, kNone, 0, 0, 0},
    {6, "a", "lasso", 0.041, 0.004, 0.374, 0.135, 4.144, 0.422, kNone, 0, 0, 0},
    {6, "a", "adalasso", 0.032, 0.003, 0.443, 0.135, 4.512, 0.763, kNone, 0, 0, 0},
    {6, "a", "scad", 0.020, 0.009, 0.745, 0.149, 5.711, 1.151, kNone, 0, 0, 0},
    {6, "a", "mcp", 0.007, 0.003, 0.921, 0.064, 7.348, 0.510, kNone, 0, 0, 0},
    {6, "a", "rct", 0.066, 0.009, 0.253, 0.098, 4.093, 0.314, kNone, 0, 0, 0},
    {4, "b", "lasso", 0.040, 0.004, 0.351, 0.135, 4.092, 0.448, kNone, 0, 0, 0},
    {4, "b", "adalasso", 0.033, 0.003, 0.377, 0.139, 4.083, 0.561, kNone, 0, 0, 0},
    {4, "b", "scad", 0.022, 0.022, 0.719, 0.135, 5.563, 1.178, kNone, 0, 0, 0},
    {4, "b", "mcp", 0.008, 0.003, 0.868, 0.079, 6.738, 0.600, kNone, 0, 0, 0},
    {4, "b", "rct", 0.060, 0.008, 0.226, 0.090, 4.019, 0.249, kNone, 0, 0, 0},
    {5, "b", "lasso", 0.041, 0.004, 0.378, 0.125, 4.173, 0.451, kNone, 0, 0, 0},
    {5, "b", "adalasso", 0.033, 0.003, 0.411, 0.134, 4.283, 0.565, kNone, 0, 0, 0},
    {5, "b", "scad", 0.021, 0.007, 0.722, 0.138, 5.668, 1.154, kNone, 0, 0, 0},
    {5, "b", "mcp", 0.007, 0.003, 0.900, 0.065, 7.142, 0.614, kNone, 0, 0, 0},
    {5, "b", "rct", 0.063, 0.007, 0.260, 0.191, 4.067, 0.181, kNone, 0, 0, 0},
    {6, "b", "lasso", 0.041, 0.003, 0.364, 0.081, 4.124, 0.235, kNone, 0, 0, 0},
    {6, "b", "adalasso", 0.033, 0.003, 0.459, 0.145, 4.553, 0.819, kNone, 0, 0, 0},
    {6, "b", "scad", 0.020, 0.008, 0.744, 0.157, 5.802, 1.229, kNone, 0, 0, 0},
    {6, "b", "mcp", 0.008, 0.004, 0.900, 0.080, 7.146, 0.719, kNone, 0, 0, 0},
    {6, "b", "rct", 0.066, 0.007, 0.275, 0.089, 4.138, 0.255, kNone, 0, 0, 0},
    {4, "c", "lasso", 0.040, 0.003, 0.382, 0.131, 4.173, 0.385, kNone, 0, 0, 0},
    {4, "c", "adalasso", 0.034, 0.002, 0.411, 0.135, 4.264, 0.473, kNone, 0, 0, 0},
    {4, "c", "scad", 0.023, 0.006, 0.704, 0.148, 5.343, 1.168, kNone, 0, 0, 0},
    {4, "c", "mcp", 0.008, 0.004, 0.885, 0.073, 6.979, 0.531, kNone, 0, 0, 0},
    {4, "c", "rct", 0.061, 0.007, 0.267, 0.102, 4.147, 0.239, kNone, 0, 0, 0},
    {5, "c", "lasso", 0.041, 0.004, 0.418, 0.133, 4.265, 0.360, kNone, 0, 0, 0},
    {5, "c", "adalasso", 0.033, 0.003, 0.446, 0.127, 4.347, 0.446, kNone, 0, 0, 0},
    {5, "c", "scad", 0.021, 0.007, 0.726, 0.164, 5.688, 1.415, kNone, 0, 0, 0},
    {5, "c", "mcp", 0.007, 0.004, 0.905, 0.069, 7.217, 0.578, kNone, 0, 0, 0},
    {5, "c", "rct", 0.062, 0.007, 0.290, 0.173, 4.228, 0.212, kNone, 0, 0, 0},
    {6, "c", "lasso", 0.040, 0.003, 0.408, 0.103, 4.324, 0.352, kNone, 0, 0, 0},
    {6, "c", "adalasso", 0.032, 0.003, 0.478, 0.140, 4.633, 0.549, kNone, 0, 0, 0},
    {6, "c", "scad", 0.021, 0.008, 0.727, 0.179, 5.612, 1.390, kNone, 0, 0, 0},
    {6, "c", "mcp", 0.007, 0.027, 0.915, 0.062, 7.441, 0.411, kNone, 0, 0, 0},
    {6, "c", "rct", 0.064, 0.008, 0.314, 0.110, 4.275, 0.228, kNone, 0, 0, 0},
    {7, "a", "lasso", 0.002, 0.002, 0.814, 0.031, 7.083, 1.561, kNone, 0, 0, 0},
    {7, "a", "adalasso", 0.002, 0.031, 0.820, 0.031, 12.527, 0.041, kNone, 0, 0, 0},
    {7, "a", "mcp", 0.007, 0.003, 0.918, 0.060, 7.526, 0.622, kNone, 0, 0, 0},
    {7, "a", "stgp-no-info", 0.001, 0.002, 0.435, 0.161, 2.729, 0.335, kNone, 0, 0, 0},
    {7, "a", "rct", 0.025, 0.001, 0.018, 0.041, 2.302, 0.342, kNone, 0, 0, 0},
    {8, "a", "lasso", 0.001, 0.001, 0.784, 0.068, 6.071, 1.305, kNone, 0, 0, 0},
    {8, "a", "adalasso", 0.001, 0.068, 0.784, 0.068, 0.196, 0.306, kNone, 0, 0, 0},
    {8, "a", "mcp", 0.007, 0.003, 0.918, 0.060, 7.532, 0.655, kNone, 0, 0, 0},
    {8, "a", "stgp-no-info", 0.002, 0.006, 0.461, 0.185, 2.584, 0.621, kNone, 0, 0, 0},
    {8, "a", "rct", 0.027, 0.014, 0.196, 0.306, 3.038, 1.083, kNone, 0, 0, 0},
    {7, "b", "lasso", 0.002, 0.002, 0.825, 0.051, 7.328, 1.719, kNone, 0, 0, 0},
    {7, "b", "adalasso", 0.003, 0.003, 0.815, 0.095, 12.995, 4.783, kNone, 0, 0, 0},
    {7, "b", "mcp", 0.007, 0.003, 0.918, 0.060, 7.525, 0.619, kNone, 0, 0, 0},
    {7, "b", "stgp-no-info", 0.001, 0.003, 0.460, 0.171, 2.904, 0.635, kNone, 0, 0, 0},
    {7, "b", "rct", 0.030, 0.007, 0.053, 0.033, 2.520, 0.219, kNone, 0, 0, 0},
    {8, "b", "lasso", 0.001, 0.001, 0.805, 0.053, 6.639, 0.429, kNone, 0, 0, 0},
    {8, "b", "adalasso", 0.001, 0.001, 0.807, 0.062, 10.936, 6.530, kNone, 0, 0, 0},
    {8, "b", "mcp", 0.007, 0.007, 0.918, 0.060, 7.532, 0.654, kNone, 0, 0, 0},
    {8, "b", "stgp-no-info", 0.001, 0.006, 0.485, 0.192, 2.600, 0.650, kNone, 0, 0, 0},
    {8, "b", "rct", 0.030, 0.013, 0.172, 0.265, 2.949, 0.828, kNone, 0, 0, 0},
    {7, "c", "lasso", 0.002, 0.001, 0.854, 0.033, 7.228, 1.222, kNone, 0, 0, 0},
    {7, "c", "adalasso", 0.001, 0.001, 0.853, 0.033, 10.690, 2.728, kNone, 0, 0, 0},
    {7, "c", "mcp", 0.007, 0.007, 0.918, 0.060, 7.524, 0.612, kNone, 0, 0, 0},
    {7, "c", "stgp-no-info", 0.001, 0.003, 0.484, 0.210, 2.753, 0.610, kNone, 0, 0, 0},
    {7, "c", "rct", 0.034, 0.008, 0.016, 0.105, 2.761, 0.298, kNone, 0, 0, 0},
    {8, "c", "lasso", 0.041, 0.006, 0.418, 0.050, 4.265, 0.360, kNone, 0, 0, 0},
    {8, "c", "adalasso", 0.033, 0.003, 0.446, 0.127, 4.347, 0.446, kNone, 0, 0, 0},
    {8, "c", "mcp", 0.007, 0.003, 0.918, 0.069, 7.535, 0.675, kNone, 0, 0, 0},
    {8, "c", "stgp-no-info", 0.003, 0.008, 0.476, 0.226, 2.561, 0.577, kNone, 0, 0, 0},
    {8, "c", "rct", 0.045, 0.016, 0.303, 0.320, 3.284, 1.215, kNone, 0, 0, 0},
    {9, "a", "lasso", 0.019, 0.004, 0.270, 0.072, 25.607, 3.235, 0.101, 0.091, 0.0, 0.0},
    {9, "a", "glasso", 0.220, 0.055, 0.378, 0.151, 16.101, 0.626, 0.232, 0.094, 0.0, 0.0},
    {9, "a", "sgl", 0.115, 0.035, 0.010, 0.022, 12.507, 0.198, 0.135, 0.060, 0.0, 0.0},
    {9, "a", "stgp", 0.063, 0.010, 0.000, 0.000, 12.540, 0.281, 0.109, 0.060, 0.0, 0.0},
    {9, "a", "rct", 0.059, 0.003, 0.000, 0.000, 13.114, 0.198, 0.087, 0.087, 0.0, 0.0},
    {10, "a", "lasso", 0.028, 0.006, 0.411, 0.100, 33.091, 3.380, 0.140, 0.083, 0.0, 0.0},
    {10, "a", "glasso", 0.215, 0.054, 0.403, 0.141, 16.128, 0.621, 0.232, 0.094, 0.0, 0.0},
    {10, "a", "sgl", 0.126, 0.037, 0.012, 0.030, 13.366, 0.523, 0.126, 0.063, 0.0, 0.0},
    {10, "a", "stgp", 0.061, 0.007, 0.000, 0.000, 12.642, 0.354, 0.110, 0.060, 0.0, 0.0},
    {10, "a", "rct", 0.064, 0.007, 0.000, 0.000, 13.505, 0.247, 0.111, 0.091, 0.0, 0.0},
    {9, "b", "lasso", 0.019, 0.004, 0.347, 0.078, 27.557, 3.128, 0.166, 0.088, 0.0, 0.0},
    {9, "b", "glasso", 0.223, 0.053, 0.372, 0.143, 16.084, 0.618, 0.232, 0.094, 0.0, 0.0},
    {9, "b", "sgl", 0.130, 0.032, 0.012, 0.026, 12.656, 0.603, 0.170, 0.060, 0.0, 0.0},
    {9, "b", "stgp", 0.061, 0.007, 0.000, 0.000, 12.520, 0.378, 0.114, 0.062, 0.0, 0.0},
    {9, "b", "rct", 0.066, 0.006, 0.000, 0.000, 13.269, 0.281, 0.161, 0.100, 0.0, 0.0},
    {10, "b", "lasso", 0.028, 0.006, 0.415, 0.000, 32.957, 0.273, 0.145, 0.096, 0.0, 0.0},
    {10, "b", "glasso", 0.214, 0.056, 0.405, 0.140, 16.119, 0.619, 0.232, 0.094, 0.0, 0.0},
    {10, "b", "sgl", 0.128, 0.037, 0.020, 0.046, 13.353, 0.615, 0.165, 0.091, 0.0, 0.0},
    {10, "b", "stgp", 0.062, 0.007, 0.000, 0.000, 12.536, 0.173, 0.113, 0.039, 0.0, 0.0},
    {10, "b", "rct", 0.065, 0.006, 0.000, 0.000, 13.670, 0.273, 0.120, 0.096, 0.0, 0.0},
    {9, "c", "lasso", 0.019, 0.004, 0.394, 0.075, 27.949, 3.328, 0.180, 0.102, 0.0, 0.0},
    {9, "c", "glasso", 0.223, 0.058, 0.354, 0.143, 16.064, 0.619, 0.232, 0.094, 0.0, 0.0},
    {9, "c", "sgl", 0.128, 0.033, 0.013, 0.020, 12.869, 0.700, 0.165, 0.123, 0.0, 0.0},
    {9, "c", "stgp", 0.059, 0.006, 0.000, 0.000, 12.565, 0.362, 0.098, 0.064, 0.0, 0.0},
    {9, "c", "rct", 0.067, 0.006, 0.000, 0.000, 13.581, 0.260, 0.157, 0.092, 0.0, 0.0},
    {10, "c", "lasso", 0.027, 0.005, 0.427, 0.098, 32.553, 3.517, 0.151, 0.098, 0.0, 0.0},
    {10, "c", "glasso", 0.211, 0.054, 0.407, 0.137, 16.114, 0.634, 0.232, 0.094, 0.0, 0.0},
    {10, "c", "sgl", 0.135, 0.040, 0.016, 0.027, 13.566, 0.848, 0.213, 0.170, 0.0, 0.0},
    {10, "c", "stgp", 0.126, 0.037, 0.012, 0.030, 13.366, 0.523, 0.126, 0.063, 0.0, 0.0},
    {10, "c", "rct", 0.059, 0.007, 0.000, 0.000, 12.655, 0.324, 0.088, 0.066, 0.0, 0.0},
};

}  // namespace

std::vector<BenchmarkRow> published_reference(int model_id,
                                              const std::string& case_label) {
  std::vector<BenchmarkRow> rows;
  for (const Published& e : kTable) {
    if (e.model != model_id || case_label != e.case_label) continue;
    BenchmarkRow row;
    row.model_id = e.model;
    row.case_label = e.case_label;
    row.method = e.method;
    row.source = "published";
    row.replications = 50;
    row.fpr_mean = e.fpr;
    row.fpr_sd = e.fpr_sd;
    row.fnr_mean = e.fnr;
    row.fnr_sd = e.fnr_sd;
    row.l2_mean = e.l2;
    row.l2_sd = e.l2_sd;
    row.l2_raw_mean = e.l2;
    row.l2_raw_sd = e.l2_sd;
    if (e.rfpr >= 0.0) {
      row.region_fpr_mean = e.rfpr;
      row.region_fpr_sd = e.rfpr_sd;
      row.region_fnr_mean = e.rfnr;
      row.region_fnr_sd = e.rfnr_sd;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rct
