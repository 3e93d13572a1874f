namespace orbifuk {}
