// selftest.cpp -- placeholder, implementation follows.
namespace shv {}
