namespace sweak {}
