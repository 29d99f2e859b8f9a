// borcherds.cpp -- placeholder, implementation follows.
namespace shv {}
