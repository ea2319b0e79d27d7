"""Django project package for stanleyDepth."""
