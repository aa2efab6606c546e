#include <pybind11/pybind11.h>
PYBIND11_MODULE(_ramseykit, m) { m.doc() = "placeholder"; }
